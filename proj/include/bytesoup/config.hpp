#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bytesoup/soup.hpp"
#include "bytesoup/substrate.hpp"

namespace bytesoup {

// Full experiment description. Round-trips losslessly through JSON.
struct RunConfig {
    LanguageId language = LanguageId::kBff;
    Topology topology = Topology::kWellMixed;
    uint32_t num_programs = 1u << 17;
    uint32_t grid_w = 240, grid_h = 135;
    uint32_t tape_len = 64;          // per program (soup) or whole tape (longtape)
    uint32_t longtape_len = 65536;
    uint32_t epochs = 16384;         // soup epochs
    uint64_t generations = 100;      // longtape generations
    uint64_t windows_per_generation = 10000;
    uint64_t budget = 0;             // 0 = language default
    uint64_t mutation_interval = 400000;  // longtape
    double mutation_rate = 0.00024;  // soup
    uint64_t seed = 0;
    bool tracing = false;
    bool fixed_shuffle = false;
    bool grid_torus = false;
    uint32_t bff_head1_offset = 0;
    uint32_t stats_every = 10;
    uint32_t dense_from = 0, dense_to = 0;  // extra every-epoch sampling window
    uint32_t snapshot_every = 0;            // 0 = final snapshot only
    std::string out_dir;
    std::string seed_replicator_file;       // optional
    std::optional<uint32_t> seed_placement; // absent = random placement
    double stop_at_entropy = 0;             // >0: stop once reached
    unsigned workers = 1;

    Soup::Params soup_params() const;
    bool operator==(const RunConfig&) const = default;
};

std::string config_to_json(const RunConfig& config);
RunConfig config_from_json(const std::string& json_text);

RunConfig load_config_file(const std::string& path);
void save_config_file(const std::string& path, const RunConfig& config);

// Replicator files: hex bytes with optional whitespace and '#' comments, or
// (for the subtract-and-branch languages) the signed-decimal listing format.
std::vector<uint8_t> load_program_file(const std::string& path);
std::vector<uint8_t> parse_program_text(const std::string& text);

}  // namespace bytesoup
