#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spikeflow {

// Line-oriented `key = value` document. Lines starting with '#' and blank
// lines are ignored on read; keys keep insertion order on write so output
// bytes are stable.
class KvDoc {
public:
    void set(const std::string& key, const std::string& value);
    void set_double(const std::string& key, double v);
    void set_int(const std::string& key, long long v);
    void set_doubles(const std::string& key, const std::vector<double>& v);
    void set_ints(const std::string& key, const std::vector<int>& v);

    bool has(const std::string& key) const;
    // get* throw ConfigError naming the missing key.
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    long long get_int(const std::string& key) const;
    std::vector<double> get_doubles(const std::string& key) const;
    std::vector<int> get_ints(const std::string& key) const;

    std::string serialize() const;
    static KvDoc parse(const std::string& text, const std::string& origin = "");

    const std::vector<std::string>& keys() const { return order_; }

private:
    std::map<std::string, std::string> values_;
    std::vector<std::string> order_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

KvDoc read_kv_file(const std::string& path);
void write_kv_file(const std::string& path, const KvDoc& doc, const std::string& header_comment = "");

} // namespace spikeflow
