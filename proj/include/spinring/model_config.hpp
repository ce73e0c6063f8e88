#ifndef SPINRING_MODEL_CONFIG_HPP
#define SPINRING_MODEL_CONFIG_HPP

#include <string>
#include <vector>

#include "spinring/spin_model.hpp"

namespace spinring {

/// Plain-text "key = value" configuration record. Lines starting with '#'
/// (or ';') and blank lines are ignored; keys may repeat, and list values
/// may be separated by spaces or commas.
class KeyValueConfig {
public:
    static KeyValueConfig parse_text(const std::string& text);
    static KeyValueConfig parse_file(const std::string& path);

    bool has(const std::string& key) const;
    /// Last occurrence wins for scalar lookups.
    std::string get_string(const std::string& key) const;
    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    /// All occurrences, each split on spaces/commas, concatenated in order.
    std::vector<double> get_double_list(const std::string& key) const;

    /// Keys present in the record, in first-seen order.
    std::vector<std::string> keys() const;

private:
    struct Entry {
        std::string key;
        std::string value;
    };
    std::vector<Entry> entries_;
};

double parse_double(const std::string& text, const std::string& context);
int parse_int(const std::string& text, const std::string& context);

/// ModelSpec from a key = value record. Recognized keys: sites, coupling,
/// zz-weight, field (list or repeated), boundary. Missing field defaults
/// to all-zero; unknown keys are rejected.
ModelSpec model_spec_from_config(const KeyValueConfig& config);
ModelSpec model_spec_from_config_text(const std::string& text);

/// One-line rendering used in artifact headers.
std::string model_spec_summary(const ModelSpec& spec);

}  // namespace spinring

#endif
