#ifndef ORECHEB_DOCUMENT_HPP
#define ORECHEB_DOCUMENT_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "orecheb/chebrec.hpp"

namespace orecheb {

namespace detail {

/// JSON-safe integer: plain number while exactly representable in a
/// double (|v| < 2^53), decimal string beyond that.
inline nlohmann::json int_to_json(const mpz_class& v) {
    static const mpz_class lim = mpz_class(1) << 53;
    if (v < lim && v > -lim) return nlohmann::json(v.get_si());
    return nlohmann::json(v.get_str());
}

inline mpz_class int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(static_cast<long>(j.get<std::int64_t>()));
}

}  // namespace detail

/// Integer coefficient table of a normalized operator: entry j (support
/// position S^j, j = 0..order) lists the n-polynomial's coefficients by
/// ascending exponent.
inline std::vector<std::vector<mpz_class>> coefficient_table(const RecOp& op) {
    if (op.lo() != 0) throw std::domain_error("coefficient_table: operator not normalized to [0,m]");
    std::vector<std::vector<mpz_class>> t(static_cast<size_t>(op.hi()) + 1);
    for (long j = 0; j <= op.hi(); ++j) {
        const RatFunc& r = op.coeff(j);
        const Poly& p = r.as_poly();
        auto& row = t[static_cast<size_t>(j)];
        for (int i = 0; i <= p.degree(); ++i) {
            BigRat c = p.coeff(i);
            if (c.den() != 1)
                throw std::domain_error("coefficient_table: non-integer coefficient");
            row.push_back(c.num());
        }
    }
    return t;
}

inline RecOp operator_from_table(const std::vector<std::vector<mpz_class>>& t) {
    std::vector<RatFunc> v(t.size());
    for (size_t j = 0; j < t.size(); ++j) {
        std::vector<BigRat> c(t[j].size());
        for (size_t i = 0; i < t[j].size(); ++i) c[i] = BigRat(t[j][i]);
        v[j] = RatFunc(Poly(std::move(c)));
    }
    return RecOp(0, std::move(v));
}

/// Recurrence as an indexed equation, e.g. "(n)*c[n] + (n + 4)*c[n+4] = 0".
/// `index_shift` relabels the running index (the centered print passes the
/// support offset, producing c[n-1], c[n+1], ...).
inline std::string equation_text(const RecOp& op, long index_shift = 0) {
    std::ostringstream os;
    bool first = true;
    for (long j = op.lo(); j <= op.hi(); ++j) {
        RatFunc c = op.coeff(j);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        long idx = j + index_shift;
        os << "(" << c.str("n") << ")*c[n";
        if (idx > 0) os << "+" << idx;
        else if (idx < 0) os << idx;
        os << "]";
    }
    os << " = 0";
    return os.str();
}

struct RecurrenceDocument {
    std::string algorithm;
    std::string input;
    long order = 0;
    long support_offset = 0;
    std::vector<std::vector<mpz_class>> coefficients;
    std::vector<std::vector<mpz_class>> denominator;  // empty if absent
    bool has_denominator = false;
    std::string disclaimer;
    double timing_ms = 0;
    std::uint64_t op_count = 0;
};

inline RecurrenceDocument make_document(const RecurrenceResult& r, const std::string& input,
                                        double timing_ms, std::uint64_t op_count) {
    RecurrenceDocument d;
    d.algorithm = r.algorithm;
    d.input = input;
    d.order = r.order;
    d.support_offset = r.support_offset;
    d.coefficients = coefficient_table(r.op);
    if (r.denominator) {
        d.denominator = coefficient_table(*r.denominator);
        d.has_denominator = true;
    }
    d.disclaimer = r.hypothesis_note;
    d.timing_ms = timing_ms;
    d.op_count = op_count;
    return d;
}

inline nlohmann::json to_json(const RecurrenceDocument& d) {
    nlohmann::json j;
    j["algorithm"] = d.algorithm;
    j["input"] = d.input;
    j["order"] = d.order;
    j["support_offset"] = d.support_offset;
    auto table = [](const std::vector<std::vector<mpz_class>>& t) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& row : t) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row) r.push_back(detail::int_to_json(v));
            a.push_back(r);
        }
        return a;
    };
    j["coefficients"] = table(d.coefficients);
    if (d.has_denominator) j["denominator"] = table(d.denominator);
    j["disclaimer"] = d.disclaimer;
    j["timing_ms"] = d.timing_ms;
    j["op_count"] = d.op_count;
    return j;
}

inline RecurrenceDocument document_from_json(const nlohmann::json& j) {
    RecurrenceDocument d;
    d.algorithm = j.at("algorithm").get<std::string>();
    d.input = j.at("input").get<std::string>();
    d.order = j.at("order").get<long>();
    d.support_offset = j.at("support_offset").get<long>();
    auto table = [](const nlohmann::json& a) {
        std::vector<std::vector<mpz_class>> t;
        for (const auto& row : a) {
            std::vector<mpz_class> r;
            for (const auto& v : row) r.push_back(detail::int_from_json(v));
            t.push_back(std::move(r));
        }
        return t;
    };
    d.coefficients = table(j.at("coefficients"));
    if (j.contains("denominator")) {
        d.denominator = table(j.at("denominator"));
        d.has_denominator = true;
    }
    d.disclaimer = j.at("disclaimer").get<std::string>();
    d.timing_ms = j.at("timing_ms").get<double>();
    d.op_count = j.at("op_count").get<std::uint64_t>();
    return d;
}

}  // namespace orecheb

#endif  // ORECHEB_DOCUMENT_HPP
