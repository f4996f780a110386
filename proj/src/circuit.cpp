#include "edsim/circuit.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "edsim/pauli.hpp"
#include "json.hpp"

namespace edsim {

namespace {

using nlohmann::json;

constexpr std::uint32_t kMaxQubits = PauliString::kMaxQubits;

}  // namespace

Topology Topology::pair() {
    return Topology{TopologyKind::Pair, 2};
}

Topology Topology::closed_chain(std::uint32_t n_qubits) {
    if (n_qubits == 2) {
        throw std::invalid_argument(
            "closed_chain with 2 qubits would apply CZ(0,1) twice, which is "
            "the identity; use the pair topology instead");
    }
    if (n_qubits < 3) {
        throw std::invalid_argument("closed_chain requires at least 3 qubits");
    }
    if (n_qubits > kMaxQubits) {
        throw std::invalid_argument("closed_chain supports at most " +
                                    std::to_string(kMaxQubits) + " qubits");
    }
    return Topology{TopologyKind::ClosedChain, n_qubits};
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Topology::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    switch (kind) {
        case TopologyKind::Pair:
            out.emplace_back(0, 1);
            break;
        case TopologyKind::ClosedChain:
            out.reserve(n_qubits);
            for (std::uint32_t q = 0; q < n_qubits; ++q) {
                out.emplace_back(q, (q + 1) % n_qubits);
            }
            break;
    }
    return out;
}

CircuitSpec::CircuitSpec(Topology topology,
                         std::vector<std::vector<double>> angles)
    : topology_(topology), angles_(std::move(angles)) {
    if (topology_.kind == TopologyKind::Pair && topology_.n_qubits != 2) {
        throw std::invalid_argument("pair topology requires exactly 2 qubits");
    }
    if (topology_.kind == TopologyKind::ClosedChain && topology_.n_qubits < 3) {
        throw std::invalid_argument("closed_chain requires at least 3 qubits");
    }
    if (topology_.n_qubits > kMaxQubits) {
        throw std::invalid_argument("at most " + std::to_string(kMaxQubits) +
                                    " qubits are supported");
    }
    for (const auto& row : angles_) {
        if (row.size() != topology_.n_qubits) {
            throw std::invalid_argument(
                "angle matrix row has " + std::to_string(row.size()) +
                " entries, expected " + std::to_string(topology_.n_qubits));
        }
    }
}

double CircuitSpec::angle(std::uint32_t layer, std::uint32_t qubit) const {
    if (layer < 1 || layer > layers()) {
        throw std::out_of_range("layer " + std::to_string(layer) +
                                " out of range 1.." + std::to_string(layers()));
    }
    if (qubit >= num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(qubit) +
                                " out of range for " +
                                std::to_string(num_qubits()) + " qubits");
    }
    return angles_[layer - 1][qubit];
}

CircuitSpec CircuitSpec::with_angle(std::uint32_t layer, std::uint32_t qubit,
                                    double theta) const {
    angle(layer, qubit);  // range checks
    auto rows = angles_;
    rows[layer - 1][qubit] = theta;
    return CircuitSpec(topology_, std::move(rows));
}

std::vector<Gate> layer_gates(const CircuitSpec& spec, std::uint32_t layer) {
    if (layer < 1 || layer > spec.layers()) {
        throw std::out_of_range("layer " + std::to_string(layer) +
                                " out of range 1.." +
                                std::to_string(spec.layers()));
    }
    std::vector<Gate> gates;
    const auto edges = spec.topology().edges();
    gates.reserve(spec.num_qubits() + edges.size());
    for (std::uint32_t q = 0; q < spec.num_qubits(); ++q) {
        gates.push_back(Gate{Gate::Kind::Ry, q, q, spec.angle(layer, q)});
    }
    for (const auto& [a, b] : edges) {
        gates.push_back(Gate{Gate::Kind::Cz, a, b, 0.0});
    }
    return gates;
}

namespace {

std::vector<std::vector<double>> expand_angles(const json& angles,
                                               std::uint32_t layers,
                                               std::uint32_t n_qubits) {
    std::vector<std::vector<double>> rows;
    if (angles.is_number()) {
        rows.assign(layers,
                    std::vector<double>(n_qubits, angles.get<double>()));
        return rows;
    }
    if (!angles.is_array()) {
        throw std::invalid_argument(
            "'angles' must be a number, an array, or a matrix");
    }
    if (layers == 0) {
        if (!angles.empty()) {
            throw std::invalid_argument(
                "'angles' must be empty when 'layers' is 0");
        }
        return rows;
    }
    if (angles.size() != layers) {
        throw std::invalid_argument(
            "'angles' has " + std::to_string(angles.size()) +
            " entries, expected one per layer (" + std::to_string(layers) +
            ")");
    }
    const bool nested = angles.front().is_array();
    rows.reserve(layers);
    for (const auto& entry : angles) {
        if (entry.is_array() != nested) {
            throw std::invalid_argument(
                "'angles' mixes per-layer scalars and per-qubit rows");
        }
        if (nested) {
            if (entry.size() != n_qubits) {
                throw std::invalid_argument(
                    "angle row has " + std::to_string(entry.size()) +
                    " entries, expected " + std::to_string(n_qubits));
            }
            rows.push_back(entry.get<std::vector<double>>());
        } else {
            rows.emplace_back(n_qubits, entry.get<double>());
        }
    }
    return rows;
}

}  // namespace

CircuitSpec parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("spec is not valid JSON: ") +
                                    e.what());
    }
    try {
        if (!doc.is_object()) {
            throw std::invalid_argument("spec must be a JSON object");
        }
        if (!doc.contains("topology")) {
            throw std::invalid_argument("spec is missing 'topology'");
        }
        const std::string kind = doc.at("topology").get<std::string>();

        Topology topology{};
        if (kind == "pair") {
            if (doc.contains("n_qubits") &&
                doc.at("n_qubits").get<std::int64_t>() != 2) {
                throw std::invalid_argument(
                    "pair topology requires n_qubits = 2");
            }
            topology = Topology::pair();
        } else if (kind == "closed_chain") {
            if (!doc.contains("n_qubits")) {
                throw std::invalid_argument(
                    "closed_chain spec is missing 'n_qubits'");
            }
            const auto n = doc.at("n_qubits").get<std::int64_t>();
            if (n < 0 || n > static_cast<std::int64_t>(kMaxQubits)) {
                throw std::invalid_argument("n_qubits out of range");
            }
            topology = Topology::closed_chain(static_cast<std::uint32_t>(n));
        } else {
            throw std::invalid_argument("unknown topology '" + kind + "'");
        }

        if (!doc.contains("layers")) {
            throw std::invalid_argument("spec is missing 'layers'");
        }
        const auto layers = doc.at("layers").get<std::int64_t>();
        if (layers < 0) {
            throw std::invalid_argument("'layers' must be >= 0");
        }
        if (!doc.contains("angles")) {
            throw std::invalid_argument("spec is missing 'angles'");
        }
        auto rows = expand_angles(doc.at("angles"),
                                  static_cast<std::uint32_t>(layers),
                                  topology.n_qubits);
        return CircuitSpec(topology, std::move(rows));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed spec: ") +
                                    e.what());
    }
}

CircuitSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open spec file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string serialize_spec(const CircuitSpec& spec) {
    nlohmann::ordered_json doc;
    doc["topology"] =
        spec.topology().kind == TopologyKind::Pair ? "pair" : "closed_chain";
    doc["n_qubits"] = spec.num_qubits();
    doc["layers"] = spec.layers();
    doc["angles"] = spec.angles();
    return doc.dump(2);
}

}  // namespace edsim
