#include "hypersum/certificate.hpp"

#include "hypersum/parser.hpp"

#include <nlohmann/json.hpp>

namespace hypersum {

using ordered_json = nlohmann::ordered_json;

CertificateDocument CertificateDocument::make(const std::string& input_text,
                                              const TelescopeCertificate& cert) {
    CertificateDocument doc;
    doc.input = input_text;
    doc.sumvar = cert.sumvar.name();
    doc.recvar = cert.op.recvar.name();
    doc.order = cert.op.order();
    for (const auto& c : cert.op.coefficients) doc.coefficients.push_back(c.to_string());
    doc.certificate = cert.certificate.to_string();
    doc.status = "verified";
    return doc;
}

std::string CertificateDocument::to_json() const {
    ordered_json j;
    j["input"] = input;
    j["sumvar"] = sumvar;
    j["recvar"] = recvar;
    j["convention"] = convention;
    j["order"] = order;
    j["coefficients"] = coefficients;
    j["certificate"] = certificate;
    j["version"] = version;
    j["status"] = status;
    return j.dump(2) + "\n";
}

CertificateDocument CertificateDocument::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    CertificateDocument doc;
    doc.input = j.at("input").get<std::string>();
    doc.sumvar = j.at("sumvar").get<std::string>();
    doc.recvar = j.at("recvar").get<std::string>();
    doc.convention = j.at("convention").get<std::string>();
    doc.order = j.at("order").get<unsigned>();
    doc.coefficients = j.at("coefficients").get<std::vector<std::string>>();
    doc.certificate = j.at("certificate").get<std::string>();
    doc.version = j.at("version").get<std::string>();
    doc.status = j.at("status").get<std::string>();
    return doc;
}

TermProduct CertificateDocument::input_term() const { return parse_term_product(input); }

TelescopeCertificate CertificateDocument::reconstruct() const {
    if (convention != "forward") throw Error("unknown certificate convention: " + convention);
    TelescopeCertificate cert;
    cert.sumvar = Symbol::intern(sumvar);
    cert.op.recvar = Symbol::intern(recvar);
    if (coefficients.size() != order + 1)
        throw Error("certificate order disagrees with the coefficient list");
    for (const auto& text : coefficients) cert.op.coefficients.push_back(parse_polynomial(text));
    if (cert.op.coefficients.back().is_zero()) throw Error("zero leading recurrence coefficient");
    cert.certificate = parse_rational_function(certificate);
    return cert;
}

bool CertificateDocument::verify() const {
    try {
        return verify_certificate(input_term(), reconstruct());
    } catch (const Error&) {
        return false;
    }
}

}  // namespace hypersum
