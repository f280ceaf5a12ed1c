#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "z2norm/bundle.hpp"
#include "z2norm/oracle.hpp"
#include "z2norm/semibundle.hpp"

namespace z2norm::report {

/// Infinity is the string "inf" everywhere in output.
nlohmann::json to_json(const ExtNat& n);
nlohmann::json to_json(const SurfaceDescription& s);

/// Full report for the mapping torus. Keys are sorted, so dump() is canonical.
nlohmann::json bundle_json(const GL2Matrix& A, const ReportOptions& opts = {});
nlohmann::json semibundle_json(const GL2Matrix& A, const ReportOptions& opts = {});

/// Recomputes a report from the "kind" and "matrix" fields of a parsed document.
nlohmann::json recompute(const nlohmann::json& doc, const ReportOptions& opts = {});

std::string bundle_text(const GL2Matrix& A, const ReportOptions& opts = {});
std::string semibundle_text(const GL2Matrix& A, const ReportOptions& opts = {});

enum class ManifoldKind { Bundle, SemiBundle };

struct CensusRow {
  GL2Matrix matrix;
  ManifoldKind kind;
  std::optional<GeometryClass> geometry;  // bundles only
  std::size_t h2_order;
  std::vector<std::uint64_t> norms;  // ascending
  ExtNat mog;
  std::uint64_t meg;
};

CensusRow census_row(const GL2Matrix& A, ManifoldKind kind);

struct CensusInput {
  GL2Matrix matrix;
  ManifoldKind kind;
};

/// One matrix per line, optionally followed by "bundle" or "semibundle"
/// (default bundle). Blank lines and '#' comments are skipped.
std::vector<CensusInput> parse_census_input(std::istream& in);

std::vector<CensusRow> census(const std::vector<CensusInput>& inputs, Execution exec = Execution::Serial);

std::string csv_header();
std::string csv_line(const CensusRow& row);

}  // namespace z2norm::report
