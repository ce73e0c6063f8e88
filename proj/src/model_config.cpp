#include "spinring/model_config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinring {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

double parse_double(const std::string& text, const std::string& context) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(context + ": cannot parse '" + text + "' as a number");
    }
}

int parse_int(const std::string& text, const std::string& context) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(context + ": cannot parse '" + text + "' as an integer");
    }
}

KeyValueConfig KeyValueConfig::parse_text(const std::string& text) {
    KeyValueConfig config;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "config line " << lineno << ": expected 'key = value', got '" << t << "'";
            throw std::invalid_argument(msg.str());
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) {
            std::ostringstream msg;
            msg << "config line " << lineno << ": empty key";
            throw std::invalid_argument(msg.str());
        }
        config.entries_.push_back({key, value});
    }
    return config;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

bool KeyValueConfig::has(const std::string& key) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&key](const Entry& e) { return e.key == key; });
}

std::string KeyValueConfig::get_string(const std::string& key) const {
    const Entry* found = nullptr;
    for (const auto& e : entries_)
        if (e.key == key) found = &e;
    if (!found) throw std::invalid_argument("config: missing key '" + key + "'");
    return found->value;
}

std::string KeyValueConfig::get_string_or(const std::string& key,
                                          const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}

double KeyValueConfig::get_double(const std::string& key) const {
    return parse_double(get_string(key), "config key '" + key + "'");
}

int KeyValueConfig::get_int(const std::string& key) const {
    return parse_int(get_string(key), "config key '" + key + "'");
}

std::vector<double> KeyValueConfig::get_double_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& e : entries_) {
        if (e.key != key) continue;
        for (const auto& tok : split_list(e.value))
            out.push_back(parse_double(tok, "config key '" + key + "'"));
    }
    return out;
}

std::vector<std::string> KeyValueConfig::keys() const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
        if (std::find(out.begin(), out.end(), e.key) == out.end()) out.push_back(e.key);
    return out;
}

ModelSpec model_spec_from_config(const KeyValueConfig& config) {
    static const std::vector<std::string> known = {"sites", "coupling", "zz-weight", "field",
                                                   "boundary"};
    for (const auto& key : config.keys())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::invalid_argument("model config: unknown key '" + key + "'");

    ModelSpec spec;
    spec.n_sites = config.has("sites") ? config.get_int("sites") : 2;
    spec.coupling = config.has("coupling") ? config.get_double("coupling") : 1.0;
    spec.zz_weight = config.has("zz-weight") ? config.get_double("zz-weight") : 0.0;
    spec.boundary = boundary_from_string(config.get_string_or("boundary", "cyclic"));
    if (config.has("field"))
        spec.fields = config.get_double_list("field");
    else
        spec.fields.assign(static_cast<std::size_t>(std::max(spec.n_sites, 0)), 0.0);
    spec.validate();
    return spec;
}

ModelSpec model_spec_from_config_text(const std::string& text) {
    return model_spec_from_config(KeyValueConfig::parse_text(text));
}

std::string model_spec_summary(const ModelSpec& spec) {
    char num[64];
    std::ostringstream out;
    out << "sites=" << spec.n_sites;
    std::snprintf(num, sizeof(num), "%.15g", spec.coupling);
    out << " coupling=" << num;
    std::snprintf(num, sizeof(num), "%.15g", spec.zz_weight);
    out << " zz-weight=" << num;
    out << " boundary=" << to_string(spec.boundary) << " fields=";
    for (std::size_t i = 0; i < spec.fields.size(); ++i) {
        std::snprintf(num, sizeof(num), "%.15g", spec.fields[i]);
        out << (i ? "," : "") << num;
    }
    return out.str();
}

}  // namespace spinring
