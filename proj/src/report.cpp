#include "reals/report.hpp"

#include <sstream>

namespace reals {

void CheckReport::add(std::string name, bool pass, std::string witness) {
    results_.push_back({std::move(name), pass, std::move(witness)});
}

void CheckReport::merge(const CheckReport& other) {
    results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

bool CheckReport::all_pass() const {
    for (const auto& r : results_)
        if (!r.pass) return false;
    return true;
}

void CheckReport::print(std::ostream& os) const {
    for (const auto& r : results_) {
        os << "LAW " << r.name << ' ' << (r.pass ? "PASS" : "FAIL");
        if (!r.witness.empty()) os << ' ' << r.witness;
        os << '\n';
    }
}

std::string CheckReport::to_string() const {
    std::ostringstream os;
    print(os);
    return os.str();
}

}  // namespace reals
