#include "tpsgeo/sampling.hpp"

#include "tpsgeo/jet_matrix.hpp"

namespace tpsgeo {

std::vector<std::vector<double>> sample_points(const ModelSpec& spec, int count,
                                               std::uint64_t seed, double margin,
                                               double cond_limit) {
    const int d = spec.dim();
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<std::size_t>(count));

    std::vector<std::vector<double>> frame_values(
        static_cast<std::size_t>(d), std::vector<double>(static_cast<std::size_t>(d), 0.0));

    while (static_cast<int>(pts.size()) < count) {
        std::vector<double> p(static_cast<std::size_t>(d), 0.0);
        for (int c = 0; c < d; ++c) {
            const double lo = spec.box_lo[static_cast<std::size_t>(c)] + margin;
            const double hi = spec.box_hi[static_cast<std::size_t>(c)] - margin;
            p[static_cast<std::size_t>(c)] = lo + rng.next_double() * (hi - lo);
        }
        for (int i = 0; i < d; ++i)
            for (int a = 0; a < d; ++a)
                frame_values[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] =
                    eval_expr(
                        spec.frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)], p)
                        .value();
        auto m = frame_values;
        double cond = 0.0;
        if (!detail::invert_values(m, cond) || cond > cond_limit) continue;
        pts.push_back(std::move(p));
    }
    return pts;
}

} // namespace tpsgeo
