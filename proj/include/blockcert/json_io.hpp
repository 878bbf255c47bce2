#pragma once

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "blockcert/certificate.hpp"
#include "blockcert/hilbert.hpp"

namespace blockcert {

using Json = nlohmann::ordered_json;

/// Invalid document shape or content in a JSON input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"terms":[{"coeff":"p/q","exps":[[[i,j],e],...]},...]}
inline Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const Monomial& m : p.terms()) {
        Json exps = Json::array();
        for (const Power& pw : m.exps.powers()) exps.push_back(Json::array({Json::array({pw.var.i, pw.var.j}), pw.exp}));
        terms.push_back(Json{{"coeff", to_string(m.coeff)}, {"exps", std::move(exps)}});
    }
    return Json{{"terms", std::move(terms)}};
}

inline Polynomial polynomial_from_json(const Json& j, const IndexSet& ground) {
    try {
        if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
            throw FormatError("polynomial must be an object with a \"terms\" array");
        std::vector<Monomial> terms;
        for (const Json& t : j.at("terms")) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
                throw FormatError("term needs \"coeff\" and \"exps\"");
            if (!t.at("coeff").is_string()) throw FormatError("coefficients are decimal strings");
            const Rational c = parse_rational(t.at("coeff").get<std::string>());
            if (sgn(c) == 0) throw FormatError("zero coefficient in stored polynomial");
            std::vector<Power> powers;
            for (const Json& e : t.at("exps")) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 2)
                    throw FormatError("exponent entry must be [[i,j],e]");
                const auto i = e[0][0].get<std::int64_t>();
                const auto k = e[0][1].get<std::int64_t>();
                const auto x = e[1].get<std::int64_t>();
                if (i < 0 || k < 0 || x < 1 || x > std::numeric_limits<Exponent>::max())
                    throw FormatError("labels must be >= 0 and exponents >= 1");
                powers.push_back({{static_cast<Label>(i), static_cast<Label>(k)}, static_cast<Exponent>(x)});
            }
            Monomial m(c, std::vector<Power>{});
            m.exps = Exponents(std::move(powers));
            m.check_over(ground);
            terms.push_back(std::move(m));
        }
        Polynomial p(ground, std::move(terms));
        if (p.terms().size() != j.at("terms").size()) throw FormatError("stored polynomial is not in canonical form");
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(e.what());
    } catch (const PreconditionError& e) {
        throw FormatError(e.what());
    } catch (const ParseError& e) {
        throw FormatError(e.what());
    }
}

inline Json labels_to_json(const IndexSet& s) { return Json(s.elements()); }

inline IndexSet labels_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("label list must be an array");
    std::vector<Label> v;
    for (const Json& x : j) {
        const auto k = x.get<std::int64_t>();
        if (k < 0) throw FormatError("labels must be >= 0");
        v.push_back(static_cast<Label>(k));
    }
    try {
        return IndexSet(std::move(v));
    } catch (const PreconditionError& e) {
        throw FormatError(e.what());
    }
}

inline Json to_json(const Certificate& c) {
    Json entries = Json::array();
    for (const CertificateEntry& e : c.entries)
        entries.push_back(Json{{"left", labels_to_json(e.block.left())}, {"cofactor", to_json(e.cofactor)}});
    return Json{{"ground", labels_to_json(c.ground)},
                {"g", c.g},
                {"input", to_json(Polynomial(c.ground, c.input))},
                {"entries", std::move(entries)}};
}

/// Any shape or content problem surfaces as MalformedCertificate.
inline Certificate certificate_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw FormatError("certificate must be a JSON object");
        for (const char* key : {"ground", "g", "input", "entries"})
            if (!j.contains(key)) throw FormatError(std::string("missing \"") + key + "\"");
        Certificate c;
        c.ground = labels_from_json(j.at("ground"));
        if (c.ground.size() < 2) throw FormatError("ground set must have at least two labels");
        c.g = j.at("g").get<std::int64_t>();
        const Polynomial input = polynomial_from_json(j.at("input"), c.ground);
        if (!input.is_monomial()) throw FormatError("input must be a single nonzero monomial");
        c.input = input.terms().front();
        if (!j.at("entries").is_array()) throw FormatError("\"entries\" must be an array");
        for (const Json& e : j.at("entries")) {
            if (!e.is_object() || !e.contains("left") || !e.contains("cofactor"))
                throw FormatError("entry needs \"left\" and \"cofactor\"");
            IndexSet left = labels_from_json(e.at("left"));
            if (left.empty() || left.size() >= c.ground.size() || !left.is_subset_of(c.ground))
                throw FormatError("left set " + left.to_string() + " is not a proper nonempty subset of the ground");
            c.entries.push_back({Block(c.ground, std::move(left)), polynomial_from_json(e.at("cofactor"), c.ground)});
        }
        return c;
    } catch (const FormatError& e) {
        throw MalformedCertificate(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw MalformedCertificate(e.what());
    }
}

inline Certificate certificate_from_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedCertificate(e.what());
    }
    return certificate_from_json(j);
}

inline Json to_json(const GradedReport& r) {
    Json rows = Json::array();
    for (const GradedRow& row : r.rows)
        rows.push_back(Json{{"degree", row.degree}, {"dimR", row.dim_R}, {"dimJ", row.dim_J}, {"dimQuotient", row.dim_quotient}});
    return Json{{"ground", labels_to_json(r.ground)}, {"g", r.g}, {"rows", std::move(rows)}};
}

inline std::string to_csv(const GradedReport& r) {
    std::ostringstream os;
    os << "degree,dimR,dimJ,dimQuotient\n";
    for (const GradedRow& row : r.rows)
        os << row.degree << ',' << row.dim_R << ',' << row.dim_J << ',' << row.dim_quotient << '\n';
    return os.str();
}

} // namespace blockcert
