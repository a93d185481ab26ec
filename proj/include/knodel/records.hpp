#pragma once

#include <vector>

#include <json.hpp>

#include "knodel/construct.hpp"
#include "knodel/verify.hpp"

// Certificate records: the line-delimited structured format emitted by the
// construct CLI and consumed by the verify CLI. A verified certificate
// carries the same fields plus an appended verdict block.

namespace knodel::records {

inline constexpr const char* kCertificateSchema = "knodel-cert/1";

nlohmann::json certificate_json(const construct::ConstructionResult& res, int degree);

struct ParsedCertificate {
    i64 n = 0;
    int degree = 0;
    construct::TheoremTag tag = construct::TheoremTag::Thm1;
    u64 p = 0;
    int e = 1;
    std::vector<i64> set;
    i64 size = 0;
};
ParsedCertificate parse_certificate(const nlohmann::json& j);

nlohmann::json verdict_json(const verify::Certificate& cert);

}  // namespace knodel::records
