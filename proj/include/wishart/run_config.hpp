#pragma once

#include <map>
#include <string>
#include <string_view>

namespace wishart {

// Flat key=value settings, the on-disk format used by `--config`.
// Lines starting with '#' and blank lines are ignored; later keys win.
class RunConfig {
public:
    static RunConfig from_file_text(std::string_view text);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::string& get(const std::string& key) const;
    void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
    // Only writes when the key is absent, so flags can pre-empt file values.
    void set_default(const std::string& key, std::string value);

    // Sorted key=value lines; from_file_text(to_text()) round-trips exactly.
    std::string to_text() const;

    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace wishart
