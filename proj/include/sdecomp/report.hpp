#ifndef SDECOMP_REPORT_HPP
#define SDECOMP_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sdecomp/classifier.hpp"
#include "sdecomp/constructions.hpp"
#include "sdecomp/search.hpp"
#include "sdecomp/stepanov.hpp"
#include "sdecomp/structure.hpp"

namespace sdecomp {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
std::string tool_version();

/// Provenance tags attached to every result.
inline constexpr const char* kTheorem = "THEOREM";
inline constexpr const char* kExhaustive = "EXHAUSTIVE";
inline constexpr const char* kConstructed = "CONSTRUCTED";
inline constexpr const char* kComputed = "COMPUTED";

Json field_json(const FieldCtx& f);
Json subset_json(const FqSubset& s);
Json elems_json(const std::vector<Elem>& v);

Json pair_class_json(const PairClass& pc);
Json certificate_json(const StepanovCertificate& c);
Json structure_json(const StructureReport& r, const DichotomyResult& dich);
Json verdict_json(const Verdict& v, const SearchTask& task);
Json char_sum_json(const DoubleCharSum& s, std::uint32_t d, const FqSubset& a, const FqSubset& b);

/// Top-level report: schema, version, field identity, command echo, results.
Json envelope(const FieldCtx* f, const std::string& command, Json args, Json results,
              std::optional<double> wall_seconds = std::nullopt);

/// CSV header and row for batch classification.
std::string classify_csv_header();
std::string classify_csv_row(const PairClass& pc);

}  // namespace sdecomp

#endif  // SDECOMP_REPORT_HPP
