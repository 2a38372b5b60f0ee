#include "rinf/certificate_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "rinf/errors.hpp"

namespace rinf {

namespace {

using nlohmann::json;

json big_to_json(const BigInt& v) { return v.get_str(); }

BigInt big_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a decimal string");
    try {
        return BigInt(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: " + j.dump());
    }
}

} // namespace

std::string certificate_to_json(const SeparationCertificate& cert, int indent) {
    json doc;
    doc["version"] = 1;
    doc["case"] = case_tag_name(cert.spec.case_tag);
    doc["l"] = cert.spec.l;
    doc["k"] = cert.spec.period;

    json orbit = json::array();
    for (const auto& y : cert.spec.orbit) {
        if (y.kind().tag != RingTag::Integer)
            throw std::invalid_argument("only integer-ring certificates serialize to JSON");
        orbit.push_back(big_to_json(y.as_integer()));
    }
    doc["orbit"] = orbit;

    json points = json::array();
    for (const auto& a : cert.points) points.push_back(big_to_json(a));
    doc["points"] = points;

    json witnesses = json::array();
    for (const auto& w : cert.witnesses) {
        if (w.kind().tag != RingTag::Integer)
            throw std::invalid_argument("only integer-ring certificates serialize to JSON");
        json rows = json::array();
        for (int i = 0; i < w.dim(); ++i) {
            json row = json::array();
            for (int j = 0; j < w.dim(); ++j) row.push_back(big_to_json(w.at(i, j).as_integer()));
            rows.push_back(row);
        }
        witnesses.push_back(rows);
    }
    doc["witnesses"] = witnesses;

    json invariants = json::array();
    for (const auto& v : cert.invariants) {
        if (v.kind().tag != RingTag::Integer)
            throw std::invalid_argument("only integer-ring certificates serialize to JSON");
        invariants.push_back(big_to_json(v.as_integer()));
    }
    doc["invariants"] = invariants;

    json psi = json::array();
    if (cert.psi)
        for (const auto& c : cert.psi->coeffs()) psi.push_back(big_to_json(c));
    doc["psi_coeffs"] = psi;

    return doc.dump(indent);
}

SeparationCertificate certificate_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate JSON: ") + e.what());
    }

    try {
        SeparationCertificate cert;
        const std::string case_name = doc.at("case").get<std::string>();
        if (case_name == "C") cert.spec.case_tag = CaseTag::C;
        else if (case_name == "D") cert.spec.case_tag = CaseTag::D;
        else if (case_name == "B") cert.spec.case_tag = CaseTag::B;
        else throw std::invalid_argument("unknown case tag: " + case_name);

        cert.spec.l = doc.at("l").get<int>();
        cert.spec.period = doc.at("k").get<int>();
        cert.spec.central_sign_budget = cert.spec.case_tag != CaseTag::C;
        for (const auto& y : doc.at("orbit")) cert.spec.orbit.emplace_back(big_from_json(y));

        for (const auto& a : doc.at("points")) cert.points.push_back(big_from_json(a));

        for (const auto& rows : doc.at("witnesses")) {
            std::vector<std::vector<RingValue>> m;
            for (const auto& row : rows) {
                std::vector<RingValue> r;
                for (const auto& e : row) r.emplace_back(big_from_json(e));
                m.push_back(std::move(r));
            }
            cert.witnesses.push_back(SquareMatrix::from_rows(m));
        }

        for (const auto& v : doc.at("invariants")) cert.invariants.emplace_back(big_from_json(v));

        const auto& psi = doc.at("psi_coeffs");
        if (!psi.empty()) {
            std::vector<BigInt> coeffs;
            for (const auto& c : psi) coeffs.push_back(big_from_json(c));
            cert.psi = PolyInt::from_coeffs(std::move(coeffs));
        }
        return cert;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("certificate document incomplete: ") + e.what());
    } catch (const Error& e) {
        throw std::invalid_argument(std::string("certificate document inconsistent: ") + e.what());
    }
}

void write_certificate_file(const SeparationCertificate& cert, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << certificate_to_json(cert) << "\n";
}

SeparationCertificate read_certificate_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open for reading: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return certificate_from_json(text);
}

} // namespace rinf
