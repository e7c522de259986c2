#include "bytesoup/soup.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <thread>

namespace bytesoup {

std::string_view topology_name(Topology t) {
    switch (t) {
        case Topology::kWellMixed: return "well-mixed";
        case Topology::kGrid2d: return "grid2d";
        case Topology::kLongTape: return "longtape";
    }
    return "?";
}

std::optional<Topology> parse_topology(std::string_view name) {
    if (name == "well-mixed") return Topology::kWellMixed;
    if (name == "grid2d") return Topology::kGrid2d;
    if (name == "longtape") return Topology::kLongTape;
    return std::nullopt;
}

uint64_t MutationPolicy::threshold() const {
    if (!enabled || rate <= 0.0) return 0;
    if (rate >= 1.0) return ~0ull;
    return static_cast<uint64_t>(rate * 0x1p64);
}

namespace {
// Pairing patterns in fixed-shuffle mode come from this constant instead of
// the run seed, so runs with different seeds replay the same interactions.
constexpr uint64_t kFixedShuffleSeed = 0xf1005eedf1005eedull;
}  // namespace

Soup::Soup(const Params& params) : params_(params) {
    num_programs_ = params_.topology == Topology::kGrid2d
                        ? params_.grid_w * params_.grid_h
                        : params_.num_programs;
    if (num_programs_ == 0) throw std::invalid_argument("soup: empty population");
    if (params_.topology == Topology::kWellMixed && num_programs_ % 2 != 0)
        throw std::invalid_argument("soup: well-mixed population must be even");
    budget_ = params_.budget ? params_.budget : default_budget(params_.language);
    bytes_.resize(static_cast<size_t>(num_programs_) * params_.tape_len);
    if (params_.tracing) tokens_.resize(bytes_.size());
    randomize();
}

void Soup::randomize() {
    RngStream init(params_.seed, Stream::kSoupInit);
    for (size_t i = 0; i < bytes_.size(); ++i)
        bytes_[i] = static_cast<uint8_t>(init.at(i) & 0xFF);
    if (params_.tracing) {
        for (size_t i = 0; i < bytes_.size(); ++i)
            tokens_[i] = make_token(0, i, bytes_[i]);
    }
    epoch_ = 0;
}

uint32_t Soup::seed_replicator(std::span<const uint8_t> program,
                               std::optional<uint32_t> explicit_index) {
    if (program.size() > params_.tape_len)
        throw std::out_of_range("seed_replicator: program longer than a tape");
    uint32_t index;
    if (explicit_index) {
        if (*explicit_index >= num_programs_)
            throw std::out_of_range("seed_replicator: tape index out of range");
        index = *explicit_index;
    } else {
        RngStream pos(params_.seed, Stream::kSeedingPosition);
        index = static_cast<uint32_t>(pos.bounded(num_programs_));
    }
    const size_t base = static_cast<size_t>(index) * params_.tape_len;
    std::memcpy(bytes_.data() + base, program.data(), program.size());
    if (params_.tracing) {
        for (size_t k = 0; k < program.size(); ++k)
            tokens_[base + k] = make_token(epoch_, base + k, program[k]);
    }
    return index;
}

std::vector<std::pair<uint32_t, uint32_t>> Soup::pair_well_mixed() {
    const uint64_t shuffle_seed =
        params_.fixed_shuffle ? kFixedShuffleSeed : params_.seed;
    RngStream stream(shuffle_seed, Stream::kShuffle, epoch_);
    std::vector<uint32_t> perm = rng_shuffle(stream, num_programs_);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    pairs.reserve(num_programs_ / 2);
    for (uint32_t i = 0; i + 1 < num_programs_; i += 2)
        pairs.emplace_back(perm[i], perm[i + 1]);
    return pairs;
}

std::vector<std::pair<uint32_t, uint32_t>> Soup::pair_grid2d() {
    const uint32_t w = params_.grid_w, h = params_.grid_h;
    const uint64_t pair_seed =
        params_.fixed_shuffle ? kFixedShuffleSeed : params_.seed;
    RngStream stream(pair_seed, Stream::kPairingOrder, epoch_);
    std::vector<uint32_t> order = rng_shuffle(stream, num_programs_);
    std::vector<bool> taken(num_programs_, false);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    std::vector<uint32_t> hood;
    hood.reserve(24);
    for (uint32_t p : order) {
        const int32_t x = static_cast<int32_t>(p % w);
        const int32_t y = static_cast<int32_t>(p / w);
        hood.clear();
        for (int32_t dy = -2; dy <= 2; ++dy) {
            for (int32_t dx = -2; dx <= 2; ++dx) {
                if (dx == 0 && dy == 0) continue;
                int32_t nx = x + dx, ny = y + dy;
                if (params_.grid_torus) {
                    nx = (nx % static_cast<int32_t>(w) + w) % static_cast<int32_t>(w);
                    ny = (ny % static_cast<int32_t>(h) + h) % static_cast<int32_t>(h);
                } else if (nx < 0 || nx >= static_cast<int32_t>(w) || ny < 0 ||
                           ny >= static_cast<int32_t>(h)) {
                    continue;
                }
                const uint32_t n = static_cast<uint32_t>(ny) * w + static_cast<uint32_t>(nx);
                if (n == p) continue;  // small tori can wrap back onto p
                hood.push_back(n);
            }
        }
        if (params_.grid_torus) {
            std::sort(hood.begin(), hood.end());
            hood.erase(std::unique(hood.begin(), hood.end()), hood.end());
        }
        if (hood.empty()) continue;
        const uint32_t n = hood[stream.bounded(hood.size())];
        if (taken[p] || taken[n]) continue;
        taken[p] = taken[n] = true;
        pairs.emplace_back(p, n);
    }
    return pairs;
}

void Soup::execute_pairs(const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                         unsigned workers, EpochSummary& summary) {
    const uint32_t tl = params_.tape_len;
    const bool traced = params_.tracing;

    auto run_range = [&](size_t begin, size_t end, EpochSummary& part) {
        std::vector<uint8_t> view(2 * tl);
        std::vector<uint64_t> tok_view(traced ? 2 * tl : 0);
        for (size_t i = begin; i < end; ++i) {
            const auto [a, b] = pairs[i];
            uint8_t* pa = bytes_.data() + static_cast<size_t>(a) * tl;
            uint8_t* pb = bytes_.data() + static_cast<size_t>(b) * tl;
            std::memcpy(view.data(), pa, tl);
            std::memcpy(view.data() + tl, pb, tl);
            if (traced) {
                std::memcpy(tok_view.data(), tokens_.data() + static_cast<size_t>(a) * tl,
                            tl * sizeof(uint64_t));
                std::memcpy(tok_view.data() + tl,
                            tokens_.data() + static_cast<size_t>(b) * tl,
                            tl * sizeof(uint64_t));
            }
            ExecReport r = execute(params_.language, view,
                                   traced ? TokenArray(tok_view) : TokenArray{},
                                   budget_, 0);
            std::memcpy(pa, view.data(), tl);
            std::memcpy(pb, view.data() + tl, tl);
            if (traced) {
                std::memcpy(tokens_.data() + static_cast<size_t>(a) * tl, tok_view.data(),
                            tl * sizeof(uint64_t));
                std::memcpy(tokens_.data() + static_cast<size_t>(b) * tl,
                            tok_view.data() + tl, tl * sizeof(uint64_t));
            }
            ++part.pairs;
            part.total_steps += r.steps_executed;
            ++part.halts_by_reason[static_cast<int>(r.halt_reason)];
        }
    };

    if (workers <= 1 || pairs.size() < 2) {
        run_range(0, pairs.size(), summary);
        return;
    }
    const unsigned n = std::min<unsigned>(workers, pairs.size());
    std::vector<EpochSummary> parts(n);
    std::vector<std::thread> threads;
    threads.reserve(n);
    const size_t chunk = (pairs.size() + n - 1) / n;
    for (unsigned t = 0; t < n; ++t) {
        const size_t begin = t * chunk;
        const size_t end = std::min(pairs.size(), begin + chunk);
        if (begin >= end) break;
        threads.emplace_back(run_range, begin, end, std::ref(parts[t]));
    }
    for (auto& th : threads) th.join();
    for (const auto& part : parts) {
        summary.pairs += part.pairs;
        summary.total_steps += part.total_steps;
        for (int k = 0; k < 6; ++k) summary.halts_by_reason[k] += part.halts_by_reason[k];
    }
}

void Soup::mutate_all() {
    const uint64_t threshold = params_.mutation.threshold();
    if (threshold == 0) return;
    RngStream mask(params_.seed, Stream::kMutationMask, epoch_);
    RngStream value(params_.seed, Stream::kMutationValue, epoch_);
    for (size_t pos = 0; pos < bytes_.size(); ++pos) {
        if (mask.at(pos) >= threshold) continue;
        const uint8_t b = static_cast<uint8_t>(value.at(pos) & 0xFF);
        bytes_[pos] = b;
        if (params_.tracing) tokens_[pos] = make_token(epoch_, pos, b);
    }
}

EpochSummary Soup::run_epoch(unsigned workers) {
    // Epochs are 1-based: the initial soup is epoch 0, so mutation tokens
    // created during epoch e never collide with initialization tokens.
    ++epoch_;
    EpochSummary summary;
    auto pairs = params_.topology == Topology::kGrid2d ? pair_grid2d()
                                                       : pair_well_mixed();
    execute_pairs(pairs, workers, summary);
    mutate_all();
    return summary;
}

}  // namespace bytesoup
