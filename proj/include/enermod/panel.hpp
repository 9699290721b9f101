#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "enermod/error.hpp"

namespace enermod {

// One country-year row. While a dataset is untransformed all four numeric
// fields are strictly positive so that logarithms stay defined.
struct PanelRecord {
    std::string country;
    int year = 0;
    double co2 = 0;        // metric tons per capita
    double gdp = 0;        // constant 2010 US$ per capita
    double energy_use = 0; // kg of oil equivalent per capita
    double population = 0; // head count
};

struct YearRange {
    int first = 1995;
    int last = 2014;
};

// Canonical CSV header, in column order.
inline constexpr const char* kCsvHeader =
    "country,year,co2_mt_per_capita,gdp_const2010_usd,"
    "energy_use_kgoe_per_capita,population";

// Names accepted by column-oriented accessors (to_matrix, fit_scaler, ...).
inline const std::vector<std::string> kNumericVariables = {
    "co2", "gdp", "energy_use", "population"};

// Immutable country-year panel. Records are sorted by (country, year) and
// keys are unique; `transformed()` tells whether numeric fields hold
// natural-log values.
class PanelDataset {
public:
    PanelDataset() = default;

    // Validates, sorts, and wraps a record list. Positivity is enforced
    // only for untransformed data.
    static PanelDataset from_records(std::vector<PanelRecord> records,
                                     bool transformed = false,
                                     YearRange years = {});

    const std::vector<PanelRecord>& records() const { return records_; }
    const PanelRecord& record(std::size_t i) const { return records_[i]; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }
    bool transformed() const { return transformed_; }

    std::vector<std::string> countries() const;

private:
    std::vector<PanelRecord> records_;
    bool transformed_ = false;
};

// Disjoint train/test/holdout index lists covering 0..n-1.
struct Partition {
    std::vector<std::size_t> train_idx;
    std::vector<std::size_t> test_idx;
    std::vector<std::size_t> holdout_idx;
    std::uint64_t seed = 0;
    std::array<double, 3> proportions{0.70, 0.18, 0.12};
};

// Z-score standardizer fitted on a designated index subset.
class Scaler {
public:
    Scaler() = default;
    Scaler(std::vector<std::string> variables, Eigen::VectorXd mean,
           Eigen::VectorXd sd);

    const std::vector<std::string>& variables() const { return variables_; }
    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::VectorXd& sd() const { return sd_; }

    // Column-wise (x - mean) / sd; columns follow variables() order.
    Eigen::MatrixXd apply(const Eigen::MatrixXd& values) const;
    Eigen::MatrixXd invert(const Eigen::MatrixXd& values) const;

private:
    std::vector<std::string> variables_;
    Eigen::VectorXd mean_;
    Eigen::VectorXd sd_;
};

struct StatsRow {
    std::string country;
    std::string variable;
    double mean = 0;
    double sd = 0; // sample standard deviation, n-1 denominator
    double min = 0;
    double max = 0;
    std::size_t count = 0;
};

struct StatsTable {
    std::vector<StatsRow> rows; // sorted by (country, variable order)
};

// ---- operations ------------------------------------------------------

// Strict parser for the canonical CSV layout. Rejects a wrong header,
// non-numeric cells, non-positive values, out-of-range years, and
// duplicate (country, year) keys, naming the offending row.
PanelDataset parse_csv(std::istream& in, YearRange years = {});
PanelDataset parse_csv(const std::string& text, YearRange years = {});
PanelDataset load_csv(const std::string& path, YearRange years = {});

// Canonical emission; parse_csv(emit_csv(ds)) reproduces ds exactly.
std::string emit_csv(const PanelDataset& ds);

// Natural log of every numeric field.
PanelDataset log_transform(const PanelDataset& ds);

// Per-country mean/sd/min/max/count for the four numeric variables.
StatsTable descriptive_stats(const PanelDataset& ds);

std::string stats_to_csv(const StatsTable& table);
std::string stats_to_json(const StatsTable& table);

// Seeded random split of 0..n-1 into three blocks. Sizes follow the
// largest-remainder rule (floor(n*p) each, leftover units to the largest
// fractional parts, ties to the lower index); assignment shuffles 0..n-1
// with Pcg32(seed, kPartitionStream) and cuts contiguous blocks.
Partition make_partition(std::size_t n, const std::array<double, 3>& proportions,
                         std::uint64_t seed);

// Z-score scaler from the rows in `idx` only; sample (n-1) sd.
Scaler fit_scaler(const PanelDataset& ds, const std::vector<std::size_t>& idx,
                  const std::vector<std::string>& variables);

// Rows x variables matrix of the named columns (all rows, or `idx` rows).
Eigen::MatrixXd to_matrix(const PanelDataset& ds,
                          const std::vector<std::string>& variables);
Eigen::MatrixXd to_matrix(const PanelDataset& ds,
                          const std::vector<std::string>& variables,
                          const std::vector<std::size_t>& idx);

double numeric_field(const PanelRecord& r, const std::string& variable);

} // namespace enermod
