#pragma once

#include <string>

#include <json.hpp>

#include "dehnfill/coverbounds.hpp"
#include "dehnfill/defvar622.hpp"
#include "dehnfill/fieldcheck.hpp"
#include "dehnfill/slopescreen.hpp"

namespace dehnfill {

using Json = nlohmann::ordered_json;

struct SpecParseError : std::runtime_error {
    explicit SpecParseError(const std::string& what) : std::runtime_error("spec parse error: " + what) {}
};

Json poly_to_json(const MultiPoly& p);
Json rational_to_json(const Rational& r);

Json link_spec_to_json(const LinkSpec& spec);
LinkSpec link_spec_from_json(const Json& j);
LinkSpec load_link_spec(const std::string& path);

Json screen_report_to_json(const ScreenReport& rep);
std::string screen_report_to_csv(const ScreenReport& rep);

Json field_report_to_json(const FieldReport& rep, int approx_digits = 0);
Json axis_analysis_to_json(const AxisAnalysis& a);
Json sweep_to_json(const SweepResult& s);
Json count_bound_to_json(const CountBound& c);
Json constraints_to_json();
Json bundle_to_json(const SlopePolyBundle& b);

}  // namespace dehnfill
