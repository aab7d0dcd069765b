#pragma once

// JSON and text rendering of analysis results.  JSON objects use sorted keys
// and integers only, so dumps are byte-deterministic.

#include <optional>
#include <string>

#include <json.hpp>

#include "hypaut/autgrp.hpp"
#include "hypaut/bounds.hpp"
#include "hypaut/classify.hpp"
#include "hypaut/geometry.hpp"
#include "hypaut/harness.hpp"

namespace hypaut {

constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const SmoothnessCertificate& c);
nlohmann::json to_json(const FixedLocusReport& r);
nlohmann::json to_json(const GaloisVerdict& g);
nlohmann::json to_json(const SymGroup& g);
nlohmann::json to_json(const ClassifiedCase& c);
nlohmann::json to_json(const AuditRecord& r);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json to_json(const IntSet& s);

struct AnalysisReport {
  HomogPoly f{0, 0};
  DiagAut g;
  std::optional<SmoothnessCertificate> smoothness;  // nullopt when skipped
  EigenStructure eigen;
  FixedLocusReport fix;
  ClassifiedCase classified;
};

/// Runs the full pipeline (smoothness unless skipped).  Throws on parse,
/// range or semi-invariance errors; a Singular certificate is returned, not thrown.
AnalysisReport analyze(const HomogPoly& f, const DiagAut& g, bool skip_smoothness,
                       std::int64_t macaulay_cap = kDefaultMacaulayCap);

nlohmann::json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

struct BoundsReport {
  int n = 0;
  int d = 0;
  std::optional<IntSet> badr_bars;
  IntSet zheng;
  std::optional<IntSet> codim1;
  std::optional<IntSet> codim2;
};

BoundsReport bounds_report(int n, int d);
nlohmann::json to_json(const BoundsReport& b);
std::string to_text(const BoundsReport& b);

std::string to_text(const SymGroup& g);
std::string to_text(const AuditReport& r);

/// Wraps a payload with schema_version and command.
nlohmann::json envelope(const std::string& command, nlohmann::json payload);

}  // namespace hypaut
