#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "assoform/catvar.hpp"
#include "assoform/form.hpp"
#include "assoform/quotalg.hpp"

namespace assoform {

struct ParseError : std::runtime_error {
    ParseError(size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          pos(position) {}
    size_t pos;
};

struct DegreeError : std::runtime_error {
    explicit DegreeError(const std::string& message) : std::runtime_error(message) {}
};

// Grammar: terms joined by + / -; a term is [rational][*] factor (* factor)*
// or a bare rational; a factor is x<i> or y<i> with an optional ^<exp>;
// a rational is p or p/q. The * between a coefficient and the first factor
// may be omitted on input; the renderer always emits it. Terms with
// coefficient zero are dropped before homogeneity is checked.
Form parse_form(std::string_view text, Side side, int n, std::optional<int> expected_degree = std::nullopt);

// Deterministic inverse of parse_form: terms in grlex order, coefficients
// in lowest terms, explicit *; the zero form prints as "0".
std::string render_form(const Form& f);

std::string render_tuple(const FormTuple& t);

// One form per line; blank lines and lines starting with # are skipped.
std::vector<Form> parse_form_lines(std::string_view text, Side side, int n,
                                   std::optional<int> expected_degree = std::nullopt);

// JSON schema. Numerators/denominators are decimal strings so consumers
// never overflow:
//   {"side":"x"|"y","n":..,"degree":..,
//    "terms":[{"exp":[..],"num":"..","den":".."}]}
nlohmann::json form_to_json(const Form& f);
Form form_from_json(const nlohmann::json& j);

nlohmann::json tuple_to_json(const FormTuple& t);

nlohmann::json certificate_to_json(const MembershipCertificate& cert);

}  // namespace assoform
