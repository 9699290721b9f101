#include "enermod/panel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "enermod/rng.hpp"
#include "json.hpp"

namespace enermod {

namespace {

bool key_less(const PanelRecord& a, const PanelRecord& b) {
    if (a.country != b.country) return a.country < b.country;
    return a.year < b.year;
}

double parse_double_cell(const std::string& cell, std::size_t row, std::size_t col) {
    double value = 0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || cell.empty()) {
        raise(errc::non_numeric_cell,
              "row " + std::to_string(row) + ", column " + std::to_string(col + 1) +
                  ": cell '" + cell + "' is not numeric");
    }
    return value;
}

int parse_year_cell(const std::string& cell, std::size_t row) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        raise(errc::non_numeric_cell,
              "row " + std::to_string(row) + ", column 2: year '" + cell +
                  "' is not an integer");
    }
    return value;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

void format_double(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

} // namespace

PanelDataset PanelDataset::from_records(std::vector<PanelRecord> records,
                                        bool transformed, YearRange years) {
    std::sort(records.begin(), records.end(), key_less);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const PanelRecord& r = records[i];
        if (r.year < years.first || r.year > years.last) {
            raise(errc::invalid_year,
                  r.country + "/" + std::to_string(r.year) + ": year outside " +
                      std::to_string(years.first) + ".." + std::to_string(years.last));
        }
        if (!transformed) {
            if (!(r.co2 > 0) || !(r.gdp > 0) || !(r.energy_use > 0) ||
                !(r.population > 0)) {
                raise(errc::non_positive_value,
                      r.country + "/" + std::to_string(r.year) +
                          ": numeric fields must be strictly positive");
            }
        }
        if (i > 0 && records[i - 1].country == r.country &&
            records[i - 1].year == r.year) {
            raise(errc::duplicate_key,
                  "duplicate key (" + r.country + ", " + std::to_string(r.year) + ")");
        }
    }
    PanelDataset ds;
    ds.records_ = std::move(records);
    ds.transformed_ = transformed;
    return ds;
}

std::vector<std::string> PanelDataset::countries() const {
    std::vector<std::string> out;
    for (const auto& r : records_) {
        if (out.empty() || out.back() != r.country) out.push_back(r.country);
    }
    return out;
}

PanelDataset parse_csv(std::istream& in, YearRange years) {
    std::string line;
    if (!std::getline(in, line)) {
        raise(errc::missing_column, "empty input: header row required");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) {
        raise(errc::missing_column,
              "header mismatch: expected '" + std::string(kCsvHeader) + "', got '" +
                  line + "'");
    }

    std::vector<PanelRecord> records;
    std::size_t row = 1; // header is row 1
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != 6) {
            raise(errc::missing_column,
                  "row " + std::to_string(row) + ": expected 6 cells, got " +
                      std::to_string(cells.size()));
        }
        PanelRecord r;
        r.country = cells[0];
        r.year = parse_year_cell(cells[1], row);
        r.co2 = parse_double_cell(cells[2], row, 2);
        r.gdp = parse_double_cell(cells[3], row, 3);
        r.energy_use = parse_double_cell(cells[4], row, 4);
        r.population = parse_double_cell(cells[5], row, 5);
        const double values[4] = {r.co2, r.gdp, r.energy_use, r.population};
        for (int c = 0; c < 4; ++c) {
            if (!(values[c] > 0)) {
                raise(errc::non_positive_value,
                      "row " + std::to_string(row) + ", column " +
                          std::to_string(c + 3) + ": value must be > 0");
            }
        }
        records.push_back(std::move(r));
    }
    return PanelDataset::from_records(std::move(records), false, years);
}

PanelDataset parse_csv(const std::string& text, YearRange years) {
    std::istringstream in(text);
    return parse_csv(in, years);
}

PanelDataset load_csv(const std::string& path, YearRange years) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot open input file '" + path + "'");
    return parse_csv(in, years);
}

std::string emit_csv(const PanelDataset& ds) {
    std::string out(kCsvHeader);
    out.push_back('\n');
    for (const auto& r : ds.records()) {
        if (r.country.find(',') != std::string::npos ||
            r.country.find('\n') != std::string::npos) {
            raise(errc::non_numeric_cell,
                  "country '" + r.country + "' cannot be written to CSV");
        }
        out += r.country;
        out.push_back(',');
        out += std::to_string(r.year);
        out.push_back(',');
        format_double(out, r.co2);
        out.push_back(',');
        format_double(out, r.gdp);
        out.push_back(',');
        format_double(out, r.energy_use);
        out.push_back(',');
        format_double(out, r.population);
        out.push_back('\n');
    }
    return out;
}

PanelDataset log_transform(const PanelDataset& ds) {
    if (ds.transformed()) {
        raise(errc::already_transformed, "dataset is already log-transformed");
    }
    std::vector<PanelRecord> records = ds.records();
    for (auto& r : records) {
        r.co2 = std::log(r.co2);
        r.gdp = std::log(r.gdp);
        r.energy_use = std::log(r.energy_use);
        r.population = std::log(r.population);
    }
    return PanelDataset::from_records(std::move(records), true);
}

double numeric_field(const PanelRecord& r, const std::string& variable) {
    if (variable == "co2") return r.co2;
    if (variable == "gdp") return r.gdp;
    if (variable == "energy_use") return r.energy_use;
    if (variable == "population") return r.population;
    raise(errc::label_mismatch, "unknown variable '" + variable + "'");
}

StatsTable descriptive_stats(const PanelDataset& ds) {
    if (ds.transformed()) {
        raise(errc::already_transformed,
              "descriptive statistics expect untransformed data");
    }
    if (ds.empty()) raise(errc::empty_group, "no records to summarize");

    StatsTable table;
    for (const auto& country : ds.countries()) {
        std::vector<const PanelRecord*> group;
        for (const auto& r : ds.records()) {
            if (r.country == country) group.push_back(&r);
        }
        for (const auto& variable : kNumericVariables) {
            StatsRow row;
            row.country = country;
            row.variable = variable;
            row.count = group.size();
            double sum = 0;
            row.min = numeric_field(*group.front(), variable);
            row.max = row.min;
            for (const auto* r : group) {
                double v = numeric_field(*r, variable);
                sum += v;
                row.min = std::min(row.min, v);
                row.max = std::max(row.max, v);
            }
            row.mean = sum / static_cast<double>(group.size());
            double ss = 0;
            for (const auto* r : group) {
                double d = numeric_field(*r, variable) - row.mean;
                ss += d * d;
            }
            row.sd = group.size() > 1
                         ? std::sqrt(ss / static_cast<double>(group.size() - 1))
                         : 0.0;
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

std::string stats_to_csv(const StatsTable& table) {
    std::string out = "country,variable,mean,sd,min,max,n\n";
    for (const auto& r : table.rows) {
        out += r.country;
        out.push_back(',');
        out += r.variable;
        out.push_back(',');
        format_double(out, r.mean);
        out.push_back(',');
        format_double(out, r.sd);
        out.push_back(',');
        format_double(out, r.min);
        out.push_back(',');
        format_double(out, r.max);
        out.push_back(',');
        out += std::to_string(r.count);
        out.push_back('\n');
    }
    return out;
}

std::string stats_to_json(const StatsTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
        rows.push_back({{"country", r.country},
                        {"variable", r.variable},
                        {"mean", r.mean},
                        {"sd", r.sd},
                        {"min", r.min},
                        {"max", r.max},
                        {"n", r.count}});
    }
    return nlohmann::json{{"stats", rows}}.dump(2) + "\n";
}

Partition make_partition(std::size_t n, const std::array<double, 3>& proportions,
                         std::uint64_t seed) {
    double sum = proportions[0] + proportions[1] + proportions[2];
    for (double p : proportions) {
        if (!(p > 0)) raise(errc::bad_proportions, "proportions must be positive");
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        raise(errc::bad_proportions, "proportions must sum to 1");
    }
    if (n < 3) raise(errc::too_few_records, "need at least 3 records to split");

    // Largest-remainder sizes.
    std::array<std::size_t, 3> sizes{};
    std::array<double, 3> remainder{};
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        double exact = static_cast<double>(n) * proportions[i];
        sizes[i] = static_cast<std::size_t>(std::floor(exact));
        remainder[i] = exact - std::floor(exact);
        assigned += sizes[i];
    }
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return remainder[a] > remainder[b]; });
    for (std::size_t k = 0; assigned < n; ++k, ++assigned) sizes[order[k % 3]] += 1;

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Pcg32 rng(seed, Pcg32::kPartitionStream);
    rng.shuffle(idx);

    Partition part;
    part.seed = seed;
    part.proportions = proportions;
    part.train_idx.assign(idx.begin(), idx.begin() + sizes[0]);
    part.test_idx.assign(idx.begin() + sizes[0], idx.begin() + sizes[0] + sizes[1]);
    part.holdout_idx.assign(idx.begin() + sizes[0] + sizes[1], idx.end());
    return part;
}

Scaler::Scaler(std::vector<std::string> variables, Eigen::VectorXd mean,
               Eigen::VectorXd sd)
    : variables_(std::move(variables)), mean_(std::move(mean)), sd_(std::move(sd)) {}

Eigen::MatrixXd Scaler::apply(const Eigen::MatrixXd& values) const {
    if (values.cols() != mean_.size()) {
        raise(errc::dimension_mismatch, "scaler: wrong number of columns");
    }
    return (values.rowwise() - mean_.transpose()).array().rowwise() /
           sd_.transpose().array();
}

Eigen::MatrixXd Scaler::invert(const Eigen::MatrixXd& values) const {
    if (values.cols() != mean_.size()) {
        raise(errc::dimension_mismatch, "scaler: wrong number of columns");
    }
    return (values.array().rowwise() * sd_.transpose().array()).matrix().rowwise() +
           mean_.transpose();
}

Scaler fit_scaler(const PanelDataset& ds, const std::vector<std::size_t>& idx,
                  const std::vector<std::string>& variables) {
    if (idx.empty()) raise(errc::empty_split, "scaler: empty index list");
    Eigen::VectorXd mean(variables.size());
    Eigen::VectorXd sd(variables.size());
    for (std::size_t v = 0; v < variables.size(); ++v) {
        double sum = 0;
        for (std::size_t i : idx) sum += numeric_field(ds.record(i), variables[v]);
        double m = sum / static_cast<double>(idx.size());
        double ss = 0;
        for (std::size_t i : idx) {
            double d = numeric_field(ds.record(i), variables[v]) - m;
            ss += d * d;
        }
        double s = idx.size() > 1
                       ? std::sqrt(ss / static_cast<double>(idx.size() - 1))
                       : 0.0;
        if (!(s > 0)) {
            raise(errc::constant_column,
                  "variable '" + variables[v] + "' is constant over the fit subset");
        }
        mean(static_cast<Eigen::Index>(v)) = m;
        sd(static_cast<Eigen::Index>(v)) = s;
    }
    return Scaler(variables, std::move(mean), std::move(sd));
}

Eigen::MatrixXd to_matrix(const PanelDataset& ds,
                          const std::vector<std::string>& variables,
                          const std::vector<std::size_t>& idx) {
    Eigen::MatrixXd out(idx.size(), variables.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t v = 0; v < variables.size(); ++v) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(v)) =
                numeric_field(ds.record(idx[i]), variables[v]);
        }
    }
    return out;
}

Eigen::MatrixXd to_matrix(const PanelDataset& ds,
                          const std::vector<std::string>& variables) {
    std::vector<std::size_t> idx(ds.size());
    std::iota(idx.begin(), idx.end(), 0);
    return to_matrix(ds, variables, idx);
}

} // namespace enermod
