// Flat key/value configuration. Every parameter of the simulator has an
// embedded default; a config file (lines of "key = value", '#' comments)
// overrides defaults. Unknown keys are rejected so typos cannot silently
// change an experiment.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wormnav {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Config {
public:
    // Full default parameter set.
    static Config defaults();

    // Defaults overridden by the file at `path`.
    static Config load(const std::string& path);

    // Override a single key ("key=value"), as from a --set flag.
    void set(const std::string& key, const std::string& value);
    void apply_assignment(const std::string& assignment);

    bool has(const std::string& key) const;
    const std::string& get_string(const std::string& key) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    bool get_bool(const std::string& key) const;

    // List of doubles separated by whitespace, commas, or semicolons.
    std::vector<double> get_double_list(const std::string& key) const;

    // All resolved entries, sorted by key (echoed into stats output).
    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

} // namespace wormnav
