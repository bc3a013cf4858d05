#pragma once

// Internal: collects axis crossings deduplicated by position along the
// axis and translate signature.  Deep conjugators recompute the same
// crossing with noise well above any fixed rounding grid, so membership
// is nearest-match within a tolerance that sits between the numeric
// noise (~1e-6 at the depths used) and the geometric separation of
// distinct crossings (~1e-2 and above at desk scale).

#include <cmath>
#include <vector>

namespace amalgam::detail {

struct CrossingSet {
    struct Item {
        double t, lr;
        bool sign;
    };
    double tol = 2e-4;
    std::vector<Item> items;

    // returns true when the crossing was new
    bool insert(double t, double lr, bool sign) {
        for (const Item& it : items) {
            if (it.sign == sign && std::fabs(it.t - t) < tol &&
                std::fabs(it.lr - lr) < tol * (1.0 + std::fabs(lr)))
                return false;
        }
        items.push_back({t, lr, sign});
        return true;
    }

    std::size_t size() const { return items.size(); }
};

} // namespace amalgam::detail
