#pragma once

#include "hypersum/zeilberger.hpp"

#include <string>
#include <vector>

namespace hypersum {

inline constexpr const char* kToolVersion = "hypersum 0.1.0";

/// The on-disk proof object: everything needed to re-check
///   sum_i s_i(n) F(n+i,k) = G(n,k+1) - G(n,k),  G = R F
/// from scratch. All payloads are grammar strings; no binary floats.
struct CertificateDocument {
    std::string input;
    std::string sumvar = "k";
    std::string recvar = "n";
    std::string convention = "forward";
    unsigned order = 0;
    std::vector<std::string> coefficients;
    std::string certificate;
    std::string version = kToolVersion;
    std::string status = "unverified";

    static CertificateDocument make(const std::string& input_text,
                                    const TelescopeCertificate& cert);

    std::string to_json() const;  // deterministic key order and layout
    static CertificateDocument from_json(const std::string& text);

    TermProduct input_term() const;
    TelescopeCertificate reconstruct() const;

    /// Re-parse every payload and re-run the exact telescoping check.
    bool verify() const;
};

}  // namespace hypersum
