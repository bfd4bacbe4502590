#pragma once

#include <span>
#include <string>
#include <vector>

#include "cyreg/bootstrap.hpp"
#include "cyreg/filtration.hpp"
#include "cyreg/matching.hpp"
#include "cyreg/metric.hpp"
#include "cyreg/persistence.hpp"

namespace cyreg {

/// Rounds to 9 significant digits, the precision of every emitted float.
double round9(double x);

/// Comma-separated floats, one point per row. A first row that does not
/// parse as numbers is taken as a header. Blank lines are skipped.
PointCloud parse_csv(const std::string& text);
PointCloud read_csv(const std::string& path);
std::string to_csv(const PointCloud& pc);

/// Explicit filtration: a JSON list of {"vertices": [...], "value": v} with
/// an optional integer "rank" tie-break, or an object holding such a list
/// under "simplices".
std::vector<FilteredSimplex> parse_filtration_json(const std::string& text);
FilteredComplex read_filtration_json(const std::string& path);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

std::string intervals_to_json(const FilteredComplex& fc,
                              std::span<const PersistenceInterval> intervals, int k_max);

std::string matching_to_json(const FilteredComplex& fx, const FilteredComplex& fy,
                             const FilteredComplex& fz, const MatchResult& m);

std::string prevalence_to_json(const PrevalenceReport& r);
std::string prevalence_to_csv(const PrevalenceReport& r);
/// Top `top` intervals by prevalence, tab separated, for bar charts.
std::string prevalence_plot_tsv(const PrevalenceReport& r, std::size_t top);

}  // namespace cyreg
