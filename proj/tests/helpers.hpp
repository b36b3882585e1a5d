#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "latcoh/form.hpp"
#include "latcoh/graph.hpp"

namespace latcoh_tests {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline latcoh::PlumbingGraph load_graph(const std::string& name) {
    return latcoh::parse_graph_auto(read_file(std::string(LATCOH_DATA_DIR) + "/" + name));
}

}  // namespace latcoh_tests
