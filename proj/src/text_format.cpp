#include "spikeflow/text_format.hpp"
#include "spikeflow/errors.hpp"
#include "spikeflow/util.hpp"

#include <fstream>
#include <sstream>

namespace spikeflow {

void KvDoc::set(const std::string& key, const std::string& value) {
    if (!values_.count(key)) order_.push_back(key);
    values_[key] = value;
}

void KvDoc::set_double(const std::string& key, double v) { set(key, format_double(v)); }
void KvDoc::set_int(const std::string& key, long long v) { set(key, std::to_string(v)); }

void KvDoc::set_doubles(const std::string& key, const std::vector<double>& v) {
    std::vector<std::string> parts;
    parts.reserve(v.size());
    for (double x : v) parts.push_back(format_double(x));
    set(key, join(parts, " "));
}

void KvDoc::set_ints(const std::string& key, const std::vector<int>& v) {
    std::vector<std::string> parts;
    parts.reserve(v.size());
    for (int x : v) parts.push_back(std::to_string(x));
    set(key, join(parts, " "));
}

bool KvDoc::has(const std::string& key) const { return values_.count(key) != 0; }

const std::string& KvDoc::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing key '" + key + "'");
    return it->second;
}

std::string KvDoc::get_or(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double KvDoc::get_double(const std::string& key) const { return parse_double(get(key)); }
long long KvDoc::get_int(const std::string& key) const { return parse_int(get(key)); }

std::vector<double> KvDoc::get_doubles(const std::string& key) const {
    std::vector<double> out;
    for (const auto& tok : split_ws(get(key))) out.push_back(parse_double(tok));
    return out;
}

std::vector<int> KvDoc::get_ints(const std::string& key) const {
    std::vector<int> out;
    for (const auto& tok : split_ws(get(key))) out.push_back(static_cast<int>(parse_int(tok)));
    return out;
}

std::string KvDoc::serialize() const {
    std::string out;
    for (const auto& key : order_) {
        out += key;
        out += " = ";
        out += values_.at(key);
        out += '\n';
    }
    return out;
}

KvDoc KvDoc::parse(const std::string& text, const std::string& origin) {
    KvDoc doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        auto trim = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t\r");
            std::size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        doc.set(key, value);
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

KvDoc read_kv_file(const std::string& path) {
    return KvDoc::parse(read_file(path), path);
}

void write_kv_file(const std::string& path, const KvDoc& doc, const std::string& header_comment) {
    std::string out;
    if (!header_comment.empty()) {
        std::istringstream in(header_comment);
        std::string line;
        while (std::getline(in, line)) out += "# " + line + "\n";
    }
    out += doc.serialize();
    write_file(path, out);
}

} // namespace spikeflow
