#include "swk/core.hpp"

#include <algorithm>
#include <sstream>

namespace swk {

void CheckReport::normalize() {
    std::sort(violations.begin(), violations.end(),
              [](const Violation& a, const Violation& b) {
                  if (a.axiom != b.axiom) return a.axiom < b.axiom;
                  return a.detail < b.detail;
              });
    violations.erase(std::unique(violations.begin(), violations.end(),
                                 [](const Violation& a, const Violation& b) {
                                     return a.axiom == b.axiom &&
                                            a.detail == b.detail;
                                 }),
                     violations.end());
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    os << configurations << " configurations, " << violations.size()
       << " violations";
    for (const auto& v : violations) os << "\n  [" << v.axiom << "] " << v.detail;
    return os.str();
}

std::vector<ObjId> SwCategory::objects_within(int bound) const {
    std::vector<ObjId> out;
    for (ObjId x = 0; x < object_count(); ++x)
        if (object_size(x) <= bound) out.push_back(x);
    return out;
}

}  // namespace swk
