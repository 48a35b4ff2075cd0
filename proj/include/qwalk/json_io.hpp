#ifndef QWALK_JSON_IO_HPP
#define QWALK_JSON_IO_HPP

// JSON and CSV renderings of polynomials, closed-form spectra, and
// comparison reports. Big integers travel as decimal strings.

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qwalk/gi_invariants.hpp"
#include "qwalk/polynomial.hpp"
#include "qwalk/support_spectra.hpp"
#include "qwalk/verification.hpp"

namespace qwalk {

using json = nlohmann::ordered_json;

/// Ascending coefficients as decimal strings.
inline json to_json(const polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients())
        arr.push_back(c.str());
    return arr;
}

inline polynomial polynomial_from_json(const json& j) {
    if (!j.is_array())
        throw parameter_error("polynomial JSON must be an array of decimal strings");
    std::vector<big_int> c;
    for (const auto& e : j) {
        if (!e.is_string())
            throw parameter_error("polynomial JSON must be an array of decimal strings");
        const auto& s = e.get_ref<const std::string&>();
        const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                            s != "-";
        if (!digits)
            throw parameter_error("not a decimal integer: '" + s + "'");
        c.emplace_back(s);
    }
    return polynomial(std::move(c));
}

/// Fixed number of significant digits, "-0" folded to "0".
inline std::string format_number(double x, int digits = 12) {
    if (std::abs(x) < 1e-12)
        x = 0;
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

inline std::string format_complex(std::complex<double> z, int digits = 12) {
    const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
    if (im == 0)
        return format_number(re, digits);
    std::string s = format_number(re, digits);
    s += im < 0 ? " - " : " + ";
    s += format_number(std::abs(im), digits) + "i";
    return s;
}

inline json complex_json(std::complex<double> z) {
    return json::array({std::abs(z.real()) < 1e-12 ? 0.0 : z.real(), std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag()});
}

inline json to_json(const closed_form_spectrum& s) {
    json entries = json::array();
    for (const auto& r : s.rationals)
        entries.push_back({{"type", "rational"}, {"value", r.value.str()}, {"multiplicity", r.multiplicity}});
    for (const auto& p : s.pairs) {
        auto [a, b] = p.roots();
        json e{{"type", "quadratic-pair"}};
        if (p.exact())
            e["lambda"] = p.lambda_exact->str();
        else
            e["lambda"] = p.lambda;
        e["k"] = p.k;
        e["squared"] = p.squared;
        e["exact"] = p.exact();
        if (p.exact()) {
            e["root_sum"] = p.root_sum().str();
            e["root_product"] = p.root_product().str();
        }
        e["values"] = json::array({complex_json(a), complex_json(b)});
        e["multiplicity"] = p.multiplicity;
        entries.push_back(std::move(e));
    }
    json out{{"n", s.n}, {"k", s.k}, {"matrix", s.squared ? "S+(U^2)" : "S+(U)"}, {"entries", std::move(entries)}};
    if (s.irrational_lambdas.degree() > 0)
        out["irrational_lambda_polynomial"] = to_json(s.irrational_lambdas);
    out["total_multiplicity"] = s.total_multiplicity();
    return out;
}

inline json to_json(const compare_report& r) {
    json verdicts = json::object();
    for (invariant i : all_invariants)
        verdicts[std::string(key(i))] = std::string(to_string(r[i]));
    return {{"ids", json::array({r.ids.first, r.ids.second})},
            {"verdicts", std::move(verdicts)},
            {"distinguishing_invariant", r.distinguishing ? json(std::string(key(*r.distinguishing))) : json(nullptr)}};
}

inline constexpr const char* cospectrality_note =
    "cospectral on every invariant does not certify isomorphism";

inline json to_json(const batch_report& b) {
    json pairs = json::array();
    for (const auto& r : b.pairs)
        pairs.push_back(to_json(r));
    json skipped = json::array();
    for (const auto& s : b.skipped)
        skipped.push_back({{"id", s.id}, {"reason", s.reason}});
    return {{"pairs", std::move(pairs)}, {"skipped", std::move(skipped)}, {"note", cospectrality_note}};
}

inline json to_json(const invariant_profile& p) {
    json polys = json::object();
    for (invariant i : all_invariants)
        polys[std::string(key(i))] = to_json(p[i]);
    return {{"id", p.id}, {"n", p.n}, {"k", p.k}, {"charpoly", std::move(polys)}};
}

inline json to_json(const check_result& r) {
    json j{{"graph", r.graph_id}, {"check", r.check}, {"status", std::string(to_string(r.status))}};
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

/// RFC 4180 quoting when needed.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

inline std::string to_csv(const batch_report& b) {
    std::string out = "id1,id2,a,s1,s2,s3,distinguishing_invariant\n";
    for (const auto& r : b.pairs) {
        out += csv_field(r.ids.first) + ',' + csv_field(r.ids.second);
        for (invariant i : all_invariants)
            out += ',' + std::string(to_string(r[i]));
        out += ',' + (r.distinguishing ? std::string(key(*r.distinguishing)) : std::string("none")) + '\n';
    }
    return out;
}

} // namespace qwalk

#endif // QWALK_JSON_IO_HPP
