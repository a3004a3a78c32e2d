#include "crwp/faults.hpp"

#include "crwp/error.hpp"

namespace crwp {

PipelineHooks corrupt_factor_hook(const CRSemigroup& s) {
    for (const HClassTask& task : all_tasks(s)) {
        const FactorTable ft = build_factor_table(s, task);
        for (std::size_t k = 0; k < ft.domain.size(); ++k) {
            if (s.letter(ft.domain[k]).component == task.alpha) continue;
            const auto& gens = task.component.generators();
            const std::size_t t = ft.entries[0][k].t;
            for (std::size_t r = 0; r < gens.size(); ++r) {
                if (gens[r].value == gens[t].value) continue;
                const std::size_t alpha = task.alpha, i = task.i, lambda = task.lambda;
                PipelineHooks hooks;
                hooks.tamper_factor = [=](const HClassTask& at, FactorTable& table) {
                    if (at.alpha == alpha && at.i == i && at.lambda == lambda) table.entries[0][k].t = r;
                };
                return hooks;
            }
        }
    }
    throw InvalidInput("no factor-table entry can be corrupted");
}

CRSemigroup corrupt_structure_map(const CRSemigroup& s) {
    if (s.maps().empty()) throw InvalidInput("semigroup has no structure maps");
    const StructureMap& m = s.maps()[0];
    const ReesComponent& low = s.component(m.lower);
    std::vector<Bitranslation> candidates{hull_identity(low)};
    for (const auto& g : low.generators()) candidates.push_back(inner_bitranslation(low, g.value));
    for (auto& c : candidates)
        if (c != m.images[0]) return s.with_image(m.upper, 0, m.lower, std::move(c));
    throw InvalidInput("no alternative image available");
}

}  // namespace crwp
