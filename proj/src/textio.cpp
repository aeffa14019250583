#include "assoform/textio.hpp"

#include <cctype>
#include <sstream>

namespace assoform {

namespace {

class Scanner {
  public:
    Scanner(std::string_view text, Side side, int n) : text_(text), side_(side), n_(n) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        skip_space();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    Int integer() {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    // p or p/q (no sign: signs belong to the +/- joining terms)
    Rational rational() {
        const Int num = integer();
        if (accept('/')) {
            const Int den = integer();
            if (den.is_zero()) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    // x<i> or y<i> with optional ^<e>; returns (variable index, exponent)
    std::pair<int, int> factor() {
        skip_space();
        const char letter = peek();
        if (letter != 'x' && letter != 'y') fail("expected a variable factor (x<i> or y<i>)");
        if (letter != side_letter(side_)) fail(std::string("wrong variable alphabet: expected ") + side_letter(side_));
        ++pos_;
        const Int index = integer();
        if (index < 1 || index > n_) fail("variable index out of range 1.." + std::to_string(n_));
        int exp = 1;
        if (accept('^')) {
            const Int e = integer();
            if (e < 0 || e > 1024) fail("exponent out of range");
            exp = static_cast<int>(e);
        }
        return {static_cast<int>(index) - 1, exp};
    }

    bool at_factor() {
        skip_space();
        return peek() == 'x' || peek() == 'y';
    }

    bool at_digit() {
        skip_space();
        return std::isdigit(static_cast<unsigned char>(peek()));
    }

    size_t position() const { return pos_; }

  private:
    std::string_view text_;
    Side side_;
    int n_;
    size_t pos_ = 0;
};

}  // namespace

Form parse_form(std::string_view text, Side side, int n, std::optional<int> expected_degree) {
    Scanner s(text, side, n);
    if (s.done()) s.fail("empty input");

    struct RawTerm {
        Rational coef;
        Monomial mono;
    };
    std::vector<RawTerm> terms;

    bool first = true;
    while (!s.done()) {
        Rational sign(1);
        if (s.accept('-'))
            sign = -1;
        else if (s.accept('+')) {
            // explicit plus
        } else if (!first) {
            s.fail("expected + or - between terms");
        }
        first = false;

        Rational coef = sign;
        bool saw_anything = false;
        bool star_pending = false;
        if (s.at_digit()) {
            coef *= s.rational();
            saw_anything = true;
            star_pending = s.accept('*');  // optional between coefficient and first factor
        }
        std::vector<int> exps(static_cast<size_t>(n), 0);
        if (star_pending || s.at_factor()) {
            saw_anything = true;
            auto [v, e] = s.factor();  // fails here on a dangling *
            exps[static_cast<size_t>(v)] += e;
            while (s.accept('*')) {
                auto [v2, e2] = s.factor();
                exps[static_cast<size_t>(v2)] += e2;
            }
        }
        if (!saw_anything) s.fail("expected a term");
        terms.push_back(RawTerm{std::move(coef), Monomial(std::move(exps))});
    }

    int degree = -1;
    for (const RawTerm& t : terms) {
        if (t.coef.is_zero()) continue;
        if (degree < 0)
            degree = t.mono.degree();
        else if (t.mono.degree() != degree)
            throw DegreeError("form is not homogeneous: saw degrees " + std::to_string(degree) + " and " +
                              std::to_string(t.mono.degree()));
    }
    if (degree < 0) degree = expected_degree.value_or(0);  // every term vanished
    if (expected_degree && degree != *expected_degree)
        throw DegreeError("expected degree " + std::to_string(*expected_degree) + ", got " + std::to_string(degree));

    Form f(side, n, degree);
    for (const RawTerm& t : terms)
        if (!t.coef.is_zero()) f.add_term(t.mono, t.coef);
    if (!f.is_zero_form() && f.terms().begin()->first.degree() != degree)
        throw DegreeError("internal degree bookkeeping failure");
    return f;
}

namespace {

std::string render_monomial(char letter, const Monomial& m) {
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += letter;
        out += std::to_string(i + 1);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

}  // namespace

std::string render_form(const Form& f) {
    if (f.is_zero_form()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string token = render_monomial(side_letter(f.side()), m);
        if (token.empty())
            token = mag.str();  // constant term (degree zero)
        else if (mag != 1)
            token = mag.str() + "*" + token;
        if (first)
            out = (negative ? "-" : "") + token;
        else
            out += (negative ? " - " : " + ") + token;
        first = false;
    }
    return out;
}

std::string render_tuple(const FormTuple& t) {
    std::string out = "(";
    for (size_t i = 0; i < t.forms.size(); ++i) {
        if (i) out += ", ";
        out += render_form(t.forms[i]);
    }
    return out + ")";
}

std::vector<Form> parse_form_lines(std::string_view text, Side side, int n, std::optional<int> expected_degree) {
    std::vector<Form> forms;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        forms.push_back(parse_form(line, side, n, expected_degree));
    }
    return forms;
}

nlohmann::json form_to_json(const Form& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        terms.push_back({{"exp", m.exponents()}, {"num", numerator_string(c)}, {"den", denominator_string(c)}});
    }
    return {{"side", std::string(1, side_letter(f.side()))},
            {"n", f.nvars()},
            {"degree", f.degree()},
            {"terms", std::move(terms)}};
}

Form form_from_json(const nlohmann::json& j) {
    const std::string side_str = j.at("side").get<std::string>();
    if (side_str != "x" && side_str != "y") throw std::invalid_argument("form json: side must be \"x\" or \"y\"");
    const Side side = side_str == "x" ? Side::X : Side::Y;
    Form f(side, j.at("n").get<int>(), j.at("degree").get<int>());
    for (const auto& term : j.at("terms")) {
        f.add_term(Monomial(term.at("exp").get<std::vector<int>>()),
                   rational_from_strings(term.at("num").get<std::string>(), term.at("den").get<std::string>()));
    }
    return f;
}

nlohmann::json tuple_to_json(const FormTuple& t) {
    nlohmann::json forms = nlohmann::json::array();
    for (const Form& f : t.forms) forms.push_back(form_to_json(f));
    return {{"n", t.nvars}, {"d", t.degree}, {"forms", std::move(forms)}};
}

nlohmann::json certificate_to_json(const MembershipCertificate& cert) {
    nlohmann::json j{{"F", form_to_json(cert.F)},
                     {"rank_D", cert.rank_D},
                     {"kernel_dim", cert.kernel_dim},
                     {"verdicts",
                      {{"V", cert.in_V},
                       {"U", cert.in_U},
                       {"GorT", cert.in_GorT},
                       {"Z", cert.in_Z},
                       {"U_Res", cert.in_U_Res}}}};
    if (cert.gorenstein_seq) j["gorenstein_seq"] = *cert.gorenstein_seq;
    if (cert.chart) j["chart"] = {{"row_subset", cert.chart->row_subset}, {"col_subset", cert.chart->col_subset}};
    if (cert.chart_resultant_nonzero) j["chart_resultant_nonzero"] = *cert.chart_resultant_nonzero;
    return j;
}

}  // namespace assoform
