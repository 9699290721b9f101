#pragma once

#include <stdexcept>
#include <string>

namespace enermod {

// Every operation failure carries one of these codes. The CLI maps the
// category to a stable process exit code (config=1, data=2, numeric=3).
enum class errc {
    // configuration / usage
    bad_proportions,
    bad_thresholds,
    bad_layer_sizes,
    bad_config,
    // data / input
    io_error,
    missing_column,
    non_numeric_cell,
    non_positive_value,
    duplicate_key,
    invalid_year,
    already_transformed,
    not_transformed,
    empty_dataset,
    empty_group,
    too_few_records,
    constant_column,
    dimension_mismatch,
    label_mismatch,
    empty_split,
    constant_target,
    zero_observation,
    empty_input,
    mismatched_indices,
    incompatible_version,
    // numerical
    rank_deficient,
    too_few_rows,
    not_nested,
    bad_degrees_of_freedom,
    non_finite_loss,
    degenerate_importance,
};

enum class error_category { config, data, numeric };

constexpr error_category category_of(errc c) {
    switch (c) {
        case errc::bad_proportions:
        case errc::bad_thresholds:
        case errc::bad_layer_sizes:
        case errc::bad_config:
            return error_category::config;
        case errc::rank_deficient:
        case errc::too_few_rows:
        case errc::not_nested:
        case errc::bad_degrees_of_freedom:
        case errc::non_finite_loss:
        case errc::degenerate_importance:
            return error_category::numeric;
        default:
            return error_category::data;
    }
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }
    error_category category() const { return category_of(code_); }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace enermod
