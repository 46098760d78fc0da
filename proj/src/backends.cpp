#include "backends.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace qroute {

namespace {

const char* nairobi_json = R"({
  "name": "nairobi",
  "num_qubits": 7,
  "edges": [
    [0, 1, 0.00777],
    [1, 2, 0.00607],
    [1, 3, 0.00792],
    [3, 5, 0.01016],
    [4, 5, 0.00619],
    [5, 6, 0.00918]
  ]
})";

const char* guadalupe_json = R"({
  "name": "guadalupe",
  "num_qubits": 16,
  "edges": [
    [0, 1, 0.009690],
    [1, 2, 0.015158],
    [1, 4, 0.007311],
    [2, 3, 0.013654],
    [3, 5, 0.012821],
    [4, 7, 0.011911],
    [5, 8, 0.008868],
    [6, 7, 0.006946],
    [7, 10, 0.006762],
    [8, 9, 0.012718],
    [8, 11, 0.009196],
    [10, 12, 0.019895],
    [11, 14, 0.010583],
    [12, 13, 0.007202],
    [12, 15, 0.007804],
    [13, 14, 0.012091]
  ]
})";

const char* cairo_json = R"({
  "name": "cairo",
  "num_qubits": 27,
  "edges": [
    [0, 1, 0.025728],
    [1, 2, 0.006662],
    [1, 4, 0.011427],
    [2, 3, 0.011890],
    [3, 5, 0.005375],
    [4, 7, 0.016432],
    [5, 8, 0.004620],
    [6, 7, 0.014319],
    [7, 10, 0.022012],
    [8, 9, 0.006167],
    [8, 11, 0.053568],
    [10, 12, 0.006628],
    [11, 14, 0.013671],
    [12, 13, 0.014007],
    [12, 15, 0.008980],
    [13, 14, 0.004904],
    [14, 16, 0.005036],
    [15, 18, 0.005864],
    [16, 19, 0.007042],
    [17, 18, 0.009230],
    [18, 21, 0.005924],
    [19, 20, 0.007014],
    [19, 22, 0.005040],
    [21, 23, 0.008903],
    [22, 25, 0.023629],
    [23, 24, 0.003967],
    [24, 25, 0.023295],
    [25, 26, 0.028715]
  ]
})";

} // namespace

std::vector<std::string> builtin_backend_names() {
    return {"nairobi", "guadalupe", "cairo"};
}

bool is_builtin_backend(const std::string& name) {
    return name == "nairobi" || name == "guadalupe" || name == "cairo";
}

std::string builtin_backend_json(const std::string& name) {
    if (name == "nairobi") {
        return nairobi_json;
    }
    if (name == "guadalupe") {
        return guadalupe_json;
    }
    if (name == "cairo") {
        return cairo_json;
    }
    throw Error(ErrorCode::invalid_argument, "unknown builtin backend '" + name + "'");
}

Topology builtin_backend(const std::string& name) {
    return load_backend(builtin_backend_json(name));
}

Topology resolve_backend(const std::string& name_or_path) {
    if (is_builtin_backend(name_or_path)) {
        return builtin_backend(name_or_path);
    }
    std::ifstream in(name_or_path);
    if (!in) {
        throw Error(ErrorCode::io, "cannot open backend file '" + name_or_path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return load_backend(os.str());
}

} // namespace qroute
