#include "csf/shur.hpp"

#include <array>

#include "csf/walks.hpp"
#include "csf/words.hpp"

namespace csf {

namespace {

constexpr std::array<std::string_view, 5> kForbidden = {"11", "222", "223", "322", "333"};

}  // namespace

std::optional<ForbiddenFactor> forbidden_factor_scan(std::string_view U, bool circular) {
    require_sword(U);
    const std::size_t n = U.size();
    std::string d(U);
    if (circular) d += U;
    const std::size_t starts = circular ? n : d.size();
    for (std::size_t i = 0; i < starts; ++i) {
        for (std::string_view pat : kForbidden) {
            if (pat.size() > n) continue;  // window bound on circular factors
            if (i + pat.size() > d.size()) continue;
            if (!circular && i + pat.size() > n) continue;
            if (d.compare(i, pat.size(), pat) == 0) {
                return ForbiddenFactor{std::string(pat), i + 1};
            }
        }
    }
    return std::nullopt;
}

std::optional<WxywWitness> wxyw_scan(std::string_view z, bool circular) {
    require_sword(z);
    const std::size_t n = z.size();
    std::string d(z);
    if (circular) d += z;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t maxlen = circular ? n : n - i;
        for (std::size_t wl = 2; 2 * wl + 2 <= maxlen; ++wl) {
            const std::size_t len = 2 * wl + 2;
            if (i + len > d.size()) continue;
            if (d.compare(i, wl, d, i + wl + 2, wl) != 0) continue;
            if (is_closed_walk_d2(std::string_view(d).substr(i, wl + 2))) {
                return WxywWitness{d.substr(i, wl), d[i + wl], d[i + wl + 1], i + 1};
            }
        }
    }
    return std::nullopt;
}

ShurReport check_shur(std::string_view U) {
    ShurReport r;
    r.closed_walk = is_closed_walk_d2(U);
    r.forbidden_factor = forbidden_factor_scan(U, true);
    r.wxyw = wxyw_scan(U, true);
    return r;
}

}  // namespace csf
