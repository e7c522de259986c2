#include "bytesoup/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bytesoup/subleq.hpp"

namespace bytesoup {

using nlohmann::json;

Soup::Params RunConfig::soup_params() const {
    Soup::Params p;
    p.language = language;
    p.topology = topology;
    p.num_programs = num_programs;
    p.grid_w = grid_w;
    p.grid_h = grid_h;
    p.tape_len = tape_len;
    p.budget = budget;
    p.mutation.rate = mutation_rate;
    p.mutation.enabled = mutation_rate > 0;
    p.seed = seed;
    p.tracing = tracing;
    p.fixed_shuffle = fixed_shuffle;
    p.grid_torus = grid_torus;
    return p;
}

std::string config_to_json(const RunConfig& c) {
    json j;
    j["language"] = std::string(language_name(c.language));
    j["topology"] = std::string(topology_name(c.topology));
    j["num_programs"] = c.num_programs;
    j["grid_w"] = c.grid_w;
    j["grid_h"] = c.grid_h;
    j["tape_len"] = c.tape_len;
    j["longtape_len"] = c.longtape_len;
    j["epochs"] = c.epochs;
    j["generations"] = c.generations;
    j["windows_per_generation"] = c.windows_per_generation;
    j["budget"] = c.budget;
    j["mutation_interval"] = c.mutation_interval;
    j["mutation_rate"] = c.mutation_rate;
    j["seed"] = c.seed;
    j["tracing"] = c.tracing;
    j["fixed_shuffle"] = c.fixed_shuffle;
    j["grid_torus"] = c.grid_torus;
    j["bff_head1_offset"] = c.bff_head1_offset;
    j["stats_every"] = c.stats_every;
    j["dense_from"] = c.dense_from;
    j["dense_to"] = c.dense_to;
    j["snapshot_every"] = c.snapshot_every;
    j["out_dir"] = c.out_dir;
    j["seed_replicator_file"] = c.seed_replicator_file;
    if (c.seed_placement) j["seed_placement"] = *c.seed_placement;
    j["stop_at_entropy"] = c.stop_at_entropy;
    j["workers"] = c.workers;
    return j.dump(2);
}

RunConfig config_from_json(const std::string& text) {
    json j = json::parse(text);
    RunConfig c;
    if (j.contains("language")) {
        auto lang = parse_language(j["language"].get<std::string>());
        if (!lang) throw std::invalid_argument("unknown language in config");
        c.language = *lang;
    }
    if (j.contains("topology")) {
        auto topo = parse_topology(j["topology"].get<std::string>());
        if (!topo) throw std::invalid_argument("unknown topology in config");
        c.topology = *topo;
    }
    auto get = [&j](const char* key, auto& field) {
        if (j.contains(key)) field = j[key].get<std::decay_t<decltype(field)>>();
    };
    get("num_programs", c.num_programs);
    get("grid_w", c.grid_w);
    get("grid_h", c.grid_h);
    get("tape_len", c.tape_len);
    get("longtape_len", c.longtape_len);
    get("epochs", c.epochs);
    get("generations", c.generations);
    get("windows_per_generation", c.windows_per_generation);
    get("budget", c.budget);
    get("mutation_interval", c.mutation_interval);
    get("mutation_rate", c.mutation_rate);
    get("seed", c.seed);
    get("tracing", c.tracing);
    get("fixed_shuffle", c.fixed_shuffle);
    get("grid_torus", c.grid_torus);
    get("bff_head1_offset", c.bff_head1_offset);
    get("stats_every", c.stats_every);
    get("dense_from", c.dense_from);
    get("dense_to", c.dense_to);
    get("snapshot_every", c.snapshot_every);
    get("out_dir", c.out_dir);
    get("seed_replicator_file", c.seed_replicator_file);
    if (j.contains("seed_placement"))
        c.seed_placement = j["seed_placement"].get<uint32_t>();
    get("stop_at_entropy", c.stop_at_entropy);
    get("workers", c.workers);
    if (c.mutation_rate < 0 || c.mutation_rate > 1)
        throw std::invalid_argument("mutation_rate must be in [0,1]");
    return c;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

void save_config_file(const std::string& path, const RunConfig& config) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << config_to_json(config) << "\n";
}

std::vector<uint8_t> parse_program_text(const std::string& text) {
    // Strip comments, then decide: a listing of signed decimals or hex.
    // A "hex:" or "decimal:" prefix forces the format; otherwise decimal is
    // assumed when a minus sign or an odd-length token appears.
    std::string body;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        body += line;
        body += ' ';
    }
    bool decimal = false;
    bool forced = false;
    const auto start = body.find_first_not_of(" \t\r\n");
    if (start != std::string::npos) {
        if (body.compare(start, 4, "hex:") == 0) {
            body = body.substr(start + 4);
            forced = true;
        } else if (body.compare(start, 8, "decimal:") == 0) {
            body = body.substr(start + 8);
            decimal = forced = true;
        }
    }
    if (!forced) {
        decimal = body.find('-') != std::string::npos;
        std::istringstream toks(body);
        std::string tok;
        while (!decimal && toks >> tok) {
            if (tok.size() % 2 != 0 ||
                tok.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
                decimal = true;
        }
    }
    if (decimal) return assemble_subleq(body);
    std::string hex;
    for (char ch : body)
        if (!std::isspace(static_cast<unsigned char>(ch))) hex += ch;
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd hex digit count");
    std::vector<uint8_t> out;
    out.reserve(hex.size() / 2);
    auto val = [](char ch) -> int {
        if (ch >= '0' && ch <= '9') return ch - '0';
        if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
        if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    for (size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<uint8_t>(val(hex[i]) * 16 + val(hex[i + 1])));
    return out;
}

std::vector<uint8_t> load_program_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open program: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_program_text(ss.str());
}

}  // namespace bytesoup
