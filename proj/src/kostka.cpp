#include "lrrc/kostka.hpp"

#include <algorithm>
#include <functional>

#include "lrrc/bijection.hpp"
#include "lrrc/lr.hpp"
#include "lrrc/rigged.hpp"
#include "lrrc/tableau.hpp"

namespace lrrc {

QPoly kostka_qp(const Partition& lambda, const RectSeq& rects)
{
    QPoly k;
    for (const auto& nu : enumerate_configs(lambda, rects)) {
        QPoly term = QPoly::monomial(cc_config(nu));
        for (int a = 1; a <= static_cast<int>(nu.size()); ++a) {
            Partition distinct = nu[a - 1];
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (int n : distinct)
                term = term * gaussian_binomial(multiplicity(nu[a - 1], n), vacancy(nu, rects, a, n));
        }
        k += term;
    }
    return k;
}

QPoly kostka_rc(const Partition& lambda, const RectSeq& rects)
{
    QPoly k;
    for (const auto& nu : enumerate_configs(lambda, rects))
        k += QPoly::monomial(cc_config(nu)) * rigging_gf(nu, rects);
    return k;
}

QPoly kostka_rc_enumerated(const Partition& lambda, const RectSeq& rects)
{
    QPoly k;
    for (const auto& rc : enumerate_rcs(lambda, rects))
        k += QPoly::monomial(cc(rc));
    return k;
}

QPoly kostka_charge(const Partition& lambda, const RectSeq& rects)
{
    QPoly k;
    for (const auto& t : enumerate_clr(lambda, rects))
        k += QPoly::monomial(charge(t, rects));
    return k;
}

QPoly kostka_foulkes(const Partition& lambda, std::vector<int> content)
{
    std::sort(content.begin(), content.end(), std::greater<>());
    while (!content.empty() && content.back() == 0)
        content.pop_back();
    QPoly k;
    for (const auto& t : column_strict_tableaux(normalized(lambda), content))
        k += QPoly::monomial(word_charge(reading_word(t)));
    return k;
}

} // namespace lrrc
