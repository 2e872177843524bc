#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shocklab/charsolver.hpp"
#include "shocklab/gas.hpp"
#include "shocklab/initial_data.hpp"

namespace shocklab {

struct SweepConfig {
    std::vector<double> etas;
    std::vector<double> thetas;
};

struct RunConfig {
    Variant variant = Variant::euler;
    GasParams gas;
    DataParams data;
    SimConfig solver;
    SweepConfig sweep;
    std::string out_dir = "out";
    std::uint64_t seed = 12345;

    void validate() const;
};

// Flat typed key-value text format with [sections]. Unknown keys, duplicate
// keys and type mismatches are errors that name the key and its line.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text, const std::string& origin = "<string>");
std::string dump_config(const RunConfig& cfg);
void save_config(const RunConfig& cfg, const std::string& path);

}  // namespace shocklab
