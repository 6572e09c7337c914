#pragma once

#include <string>

#include "polygonal.hpp"
#include "verify.hpp"
#include "witnesses.hpp"

namespace ifsx {

/// CSV point-cloud wire format: one point per line, d comma-separated decimal
/// fields, '#'-prefixed comment lines allowed, no header; 17 significant
/// digits on output.
std::string cloud_to_csv(const CompactSet& a);
CompactSet cloud_from_csv(const std::string& text);
CompactSet load_cloud(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

/// Map/system config format (JSON): {"type": "affine"|"constant"|"pwl"|
/// "logistic"|"embedded", "kind": "contraction"|"weak", per-type fields};
/// system: {"dim": d, "maps": [...]}.
std::string map_to_json_text(const ContractiveMap& m);
ContractiveMap map_from_json_text(const std::string& text);
std::string system_to_json_text(const FunctionSystem& sys);
FunctionSystem system_from_json_text(const std::string& text);

/// Witness exports: kind tag, exact rationals as "p/q" strings, maps in the
/// config format, audit entries as {condition, pass, margin, note}.
std::string witness_to_json_text(const PropPWitness& w);
std::string witness_to_json_text(const LadderWitness& w);
std::string witness_to_json_text(const IntervalWitness& w);
std::string witness_to_json_text(const EpsilonSystem& s);

/// Extracts the target cloud, delta and block count from a ladder witness
/// JSON document (as written by witness_to_json_text).
struct LadderSummary {
    CompactSet points;
    double delta = 0.0;
    std::size_t n = 0;
};
LadderSummary ladder_summary_from_json_text(const std::string& text);

std::string search_report_to_json_text(const SearchReport& r);

}  // namespace ifsx
