#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bier {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail; // witness on failure, optional note on success
};

// Ordered verification record: key/value facts followed by named checks.
// Printing is deterministic; failed checks always carry a witness.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<CheckItem> checks;

    void value(std::string key, std::string val);
    void check(std::string name, bool pass, std::string detail = "");
    void merge(const Report& other, const std::string& prefix);
    bool ok() const;
    void print_text(std::ostream& os) const;
    std::string to_json() const;
};

// "(1, 4, 4, 1)" for report lines.
std::string seq_to_string(const std::vector<long long>& v);
std::string seq_to_string(const std::vector<int>& v);

} // namespace bier
