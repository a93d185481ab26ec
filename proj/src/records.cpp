#include "knodel/records.hpp"

#include <stdexcept>

namespace knodel::records {

using nlohmann::json;

json certificate_json(const construct::ConstructionResult& res, int degree) {
    return json{{"schema", kCertificateSchema},
                {"n", res.set.universe()},
                {"degree", degree},
                {"theorem", construct::to_string(res.tag)},
                {"p", res.witness.prime},
                {"e", res.witness.exponent},
                {"size", res.claimed_size},
                {"set", res.set.to_vector()}};
}

ParsedCertificate parse_certificate(const json& j) {
    if (j.contains("schema") && j.at("schema").get<std::string>() != kCertificateSchema)
        throw std::runtime_error("certificate: unsupported schema");
    ParsedCertificate cert;
    cert.n = j.at("n").get<i64>();
    cert.degree = j.at("degree").get<int>();
    const std::string tag = j.value("theorem", "thm1");
    cert.tag = tag == "thm2" ? construct::TheoremTag::Thm2 : construct::TheoremTag::Thm1;
    cert.p = j.value("p", u64{0});
    cert.e = j.value("e", 1);
    cert.set = j.at("set").get<std::vector<i64>>();
    cert.size = j.value("size", static_cast<i64>(cert.set.size()));
    return cert;
}

json verdict_json(const verify::Certificate& cert) {
    return json{{"dominating", cert.dominating},
                {"independent", cert.independent},
                {"perfect", cert.perfect},
                {"efficient", cert.efficient},
                {"undominated", cert.undominated.to_vector()},
                {"parity_split", {cert.even_count, cert.odd_count}}};
}

}  // namespace knodel::records
