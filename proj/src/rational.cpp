#include "phom/rational.hpp"

#include "phom/error.hpp"

#include <cctype>
#include <vector>

namespace phom {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::MissingProbability: return "MissingProbability";
    case ErrorCode::TooManyUncertainEdges: return "TooManyUncertainEdges";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::UncoveredVariable: return "UncoveredVariable";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::NotA2WP: return "NotA2WP";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::MalformedFormula: return "MalformedFormula";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) throw Error(ErrorCode::Parse, "not a number: '" + std::string(whole) + "'");
    Integer value(std::string(digits), 10);
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::Parse, "empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        Integer den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        if (int_part.empty()) int_part = "0";
        if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part)))
            throw Error(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        Integer num = Integer(std::string(int_part), 10) * scale;
        if (!frac_part.empty()) num += Integer(std::string(frac_part), 10);
        Rational r(negative ? Integer(-num) : num, scale);
        r.canonicalize();
        return r;
    }
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_str();
}

std::string to_decimal(const Rational& value, int significant_digits) {
    mpf_class f(value, 512);
    std::vector<char> buf(static_cast<std::size_t>(significant_digits) + 64);
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
    return std::string(buf.data());
}

}  // namespace phom
