#pragma once

// Line-oriented check reports shared by every law checker and suite.
// One result per law: "LAW <name> PASS|FAIL [witness]".

#include <ostream>
#include <string>
#include <vector>

namespace reals {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // non-empty on FAIL, or extra detail on PASS
};

class CheckReport {
public:
    void add(std::string name, bool pass, std::string witness = "");
    void merge(const CheckReport& other);

    bool all_pass() const;
    const std::vector<CheckResult>& results() const { return results_; }

    void print(std::ostream& os) const;
    std::string to_string() const;

private:
    std::vector<CheckResult> results_;
};

}  // namespace reals
