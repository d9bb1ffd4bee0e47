#pragma once

#include <string>

#include <json.hpp>

#include "hourglass/analysis.hpp"
#include "hourglass/sufficiency.hpp"
#include "hourglass/universe.hpp"

namespace hourglass {

using json = nlohmann::ordered_json;

// JSON building blocks. Field names are stable; object key order follows
// declaration order so serialized reports are byte-reproducible.
json universe_json(const Universe& u);
json image_json(const ImageSet& image);
json lattice_json(Analyzer& analyzer);
json tradeoff_json(const std::vector<TradeoffRow>& rows);
json verification_json(const VerificationReport& report);

// Full report: {universe, lattice, images, tradeoff, verification}. Images
// list pre then post per spec in declaration order.
json analysis_report(Analyzer& analyzer);

std::string to_json_text(const json& j);

// Tradeoff table as CSV with header
// spec,pre_count,post_count,covered,value,sufficient,minimal.
std::string tradeoff_csv(const std::vector<TradeoffRow>& rows);

// Weakness lattice in DOT: equivalence classes with two or more members are
// boxed, strict edges are solid, nonstrict (equivalence) edges dashed.
std::string lattice_dot(Analyzer& analyzer);

// Hourglass view of one spec: implementations fan in below the subject,
// applications fan out above, edges labeled with the witness program.
std::string hourglass_dot(Analyzer& analyzer, const std::string& subject);

// Shortest decimal rendering without an exponent ("10", "0.5").
std::string format_number(double value);

}  // namespace hourglass
