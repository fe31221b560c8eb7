#include "nobelnet/synthetic.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "nobelnet/rng.hpp"

namespace nobelnet {

GenealogyGraph synthetic_dag(const SyntheticSpec& spec) {
    SplitMix rng{spec.seed};

    int width = 1;
    for (std::size_t p = 10; p < spec.nodes; p *= 10) ++width;
    auto node_id = [&](std::size_t i) {
        std::string digits = std::to_string(i);
        return "n" + std::string(width - digits.size(), '0') + digits;
    };

    Dataset ds;
    for (std::size_t i = 0; i < spec.nodes; ++i) {
        Person p;
        p.id = node_id(i);
        p.name = "Node " + std::to_string(i);
        p.laureate = rng.uniform() < spec.laureate_fraction;
        if (p.laureate) {
            int span = spec.last_prize_year - spec.first_prize_year + 1;
            p.prize_year = spec.first_prize_year +
                           static_cast<int>(rng.bounded(static_cast<std::uint64_t>(span)));
        }
        if (spec.degree_year_span > 0)
            p.degree_year = spec.first_degree_year +
                            static_cast<int>(rng.bounded(static_cast<std::uint64_t>(spec.degree_year_span)));
        if (spec.institutions > 0)
            p.degree_institution = "u" + std::to_string(rng.bounded(spec.institutions));
        p.sources = {"synthetic"};
        ds.persons.push_back(std::move(p));

        if (i == 0 || spec.max_advisors <= 0) continue;
        std::size_t want = rng.bounded(static_cast<std::uint64_t>(spec.max_advisors) + 1);
        want = std::min(want, i);
        std::vector<std::size_t> advisors;
        while (advisors.size() < want) {
            std::size_t a = rng.bounded(i);
            if (std::find(advisors.begin(), advisors.end(), a) == advisors.end())
                advisors.push_back(a);
        }
        std::sort(advisors.begin(), advisors.end());
        for (std::size_t a : advisors)
            ds.edges.push_back({node_id(a), node_id(i), EdgeKind::phd, "synthetic"});
    }
    return GenealogyGraph::build(std::move(ds));
}

}  // namespace nobelnet
