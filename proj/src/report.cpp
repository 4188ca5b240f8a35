#include "bier/report.hpp"

#include <ostream>

#include "json.hpp"

namespace bier {

void Report::value(std::string key, std::string val) {
    values.emplace_back(std::move(key), std::move(val));
}

void Report::check(std::string name, bool pass, std::string detail) {
    checks.push_back(CheckItem{std::move(name), pass, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& [k, v] : other.values) values.emplace_back(prefix + k, v);
    for (const auto& c : other.checks)
        checks.push_back(CheckItem{prefix + c.name, c.pass, c.detail});
}

bool Report::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::print_text(std::ostream& os) const {
    if (!command.empty()) os << "command: " << command << "\n";
    for (const auto& [k, v] : values) os << k << ": " << v << "\n";
    for (const auto& c : checks) {
        os << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    os << "result: " << (ok() ? "OK" : "FAIL") << "\n";
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [k, v] : values) vals[k] = v;
    j["values"] = vals;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        if (!c.detail.empty()) item["detail"] = c.detail;
        j["checks"].push_back(item);
    }
    j["ok"] = ok();
    return j.dump(2);
}

namespace {
template <typename T>
std::string seq_impl(const std::vector<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}
} // namespace

std::string seq_to_string(const std::vector<long long>& v) { return seq_impl(v); }
std::string seq_to_string(const std::vector<int>& v) { return seq_impl(v); }

} // namespace bier
