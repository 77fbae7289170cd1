// Copyright 2026 The msqsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"
#include "msqsp/circuit.hpp"
#include "msqsp/errors.hpp"

namespace msqsp {

namespace {

std::string format_double(double v) {
  char buf[40];
  // Adding 0.0 turns -0 into 0.
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

const char* axis_name(Axis a, bool upper) {
  switch (a) {
    case Axis::X: return upper ? "RX" : "rx";
    case Axis::Y: return upper ? "RY" : "ry";
    case Axis::Z: return upper ? "RZ" : "rz";
  }
  return "";
}

template <typename T>
T field(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw MalformedCircuit(std::string("missing field \"") + key + "\"");
  }
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw MalformedCircuit(std::string("field \"") + key + "\" has the wrong type");
  }
}

// Qubit indices are range-checked separately so that a bad index is reported
// as such rather than as a type error.
int qubit_field(const nlohmann::json& obj, const char* key, int num_qubits) {
  auto it = obj.find(key);
  if (it != obj.end() && !it->is_number_integer()) {
    throw MalformedCircuit(std::string("field \"") + key + "\" must be an integer");
  }
  const auto q = field<long long>(obj, key);
  if (q < 0 || q >= num_qubits) {
    throw QubitIndexOutOfRange(std::string(key) + " " + std::to_string(q) +
                               " outside register of " + std::to_string(num_qubits));
  }
  return static_cast<int>(q);
}

}  // namespace

std::string serialize(const Circuit& circuit) {
  std::ostringstream os;
  os << "{\n  \"version\": 1,\n"
     << "  \"num_qubits\": " << circuit.num_qubits() << ",\n"
     << "  \"target_qubit\": " << circuit.target_qubit() << ",\n"
     << "  \"ancilla_qubits\": [";
  for (std::size_t i = 0; i < circuit.ancilla_qubits().size(); ++i) {
    os << (i ? ", " : "") << circuit.ancilla_qubits()[i];
  }
  os << "],\n  \"gates\": [";
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    os << (i ? ",\n    " : "\n    ");
    std::visit(
        [&os](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, MsGate>) {
            os << R"({"type": "MS", "tau": )" << format_double(g.tau) << "}";
          } else if constexpr (std::is_same_v<T, RotationGate>) {
            os << R"({"type": ")" << axis_name(g.axis, true) << R"(", "qubit": )"
               << g.qubit << R"(, "angle": )" << format_double(g.angle) << "}";
          } else {
            os << R"({"type": "H", "qubit": )" << g.qubit << "}";
          }
        },
        gates[i]);
  }
  os << (gates.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

Circuit deserialize(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedCircuit(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedCircuit("circuit must be a JSON object");
  if (field<int>(doc, "version") != 1) {
    throw MalformedCircuit("unsupported circuit format version");
  }
  const int n = field<int>(doc, "num_qubits");
  if (n < 1) throw MalformedCircuit("num_qubits must be positive");

  const int target = qubit_field(doc, "target_qubit", n);
  std::vector<int> ancillas;
  if (doc.contains("ancilla_qubits")) {
    const auto& list = doc["ancilla_qubits"];
    if (!list.is_array()) throw MalformedCircuit("ancilla_qubits must be an array");
    for (const auto& a : list) {
      if (!a.is_number_integer()) throw MalformedCircuit("ancilla index must be an integer");
      const long long q = a.get<long long>();
      if (q < 0 || q >= n) {
        throw QubitIndexOutOfRange("ancilla " + std::to_string(q) +
                                   " outside register of " + std::to_string(n));
      }
      ancillas.push_back(static_cast<int>(q));
    }
  }

  Circuit circuit(n, target, std::move(ancillas));
  const auto& gates = doc.find("gates");
  if (gates == doc.end() || !gates->is_array()) {
    throw MalformedCircuit("missing gate array");
  }
  for (const auto& g : *gates) {
    if (!g.is_object()) throw MalformedCircuit("gate entries must be objects");
    const auto type = field<std::string>(g, "type");
    if (type == "MS") {
      circuit.add(ms(field<double>(g, "tau")));
    } else if (type == "RX" || type == "RY" || type == "RZ") {
      const Axis axis = type == "RX" ? Axis::X : type == "RY" ? Axis::Y : Axis::Z;
      const int q = qubit_field(g, "qubit", n);
      circuit.add(RotationGate{axis, q, field<double>(g, "angle")});
    } else if (type == "H") {
      circuit.add(h_gate(qubit_field(g, "qubit", n)));
    } else {
      throw UnknownGateType(type);
    }
  }
  return circuit;
}

std::string to_text(const Circuit& circuit) {
  std::ostringstream os;
  for (const Gate& gate : circuit.gates()) {
    std::visit(
        [&os](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, MsGate>) {
            os << "ms " << format_double(g.tau) << '\n';
          } else if constexpr (std::is_same_v<T, RotationGate>) {
            os << axis_name(g.axis, false) << ' ' << g.qubit << ' '
               << format_double(g.angle) << '\n';
          } else {
            os << "h " << g.qubit << '\n';
          }
        },
        gate);
  }
  return os.str();
}

}  // namespace msqsp
