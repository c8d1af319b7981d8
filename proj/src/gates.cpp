#include "qadd/gates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <unordered_map>

namespace qadd::gates {

namespace {

using std::numbers::pi;

constexpr double kUnitaryTol = 1e-10;

struct GateInfo {
  std::string name;
  int params;
  int controls;
  int targets;
};

const std::map<GateId, GateInfo>& gate_table() {
  static const std::map<GateId, GateInfo> table = {
      {GateId::I, {"I", 0, 0, 1}},       {GateId::X, {"X", 0, 0, 1}},
      {GateId::Y, {"Y", 0, 0, 1}},       {GateId::Z, {"Z", 0, 0, 1}},
      {GateId::H, {"H", 0, 0, 1}},       {GateId::S, {"S", 0, 0, 1}},
      {GateId::Sdg, {"SDG", 0, 0, 1}},   {GateId::T, {"T", 0, 0, 1}},
      {GateId::Tdg, {"TDG", 0, 0, 1}},   {GateId::RX, {"RX", 1, 0, 1}},
      {GateId::RY, {"RY", 1, 0, 1}},     {GateId::RZ, {"RZ", 1, 0, 1}},
      {GateId::U1, {"U1", 1, 0, 1}},     {GateId::U3, {"U3", 3, 0, 1}},
      {GateId::CNOT, {"CNOT", 0, 1, 1}}, {GateId::CZ, {"CZ", 0, 1, 1}},
      {GateId::CH, {"CH", 0, 1, 1}},     {GateId::CU1, {"CU1", 1, 1, 1}},
      {GateId::CCNOT, {"CCNOT", 0, 2, 1}},
      {GateId::SWAP, {"SWAP", 0, 0, 2}},
  };
  return table;
}

Mat mat2(cx a, cx b, cx c, cx d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

const std::string& gate_name(GateId id) { return gate_table().at(id).name; }

std::optional<GateId> gate_id_from_name(const std::string& name) {
  for (const auto& [id, info] : gate_table()) {
    if (info.name == name) return id;
  }
  return std::nullopt;
}

int params_required(GateId id) { return gate_table().at(id).params; }
int control_count(GateId id) { return gate_table().at(id).controls; }
int target_count(GateId id) { return gate_table().at(id).targets; }

Mat u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const cx el = std::polar(1.0, lambda);
  const cx ep = std::polar(1.0, phi);
  return mat2(c, -el * s, ep * s, el * ep * c);
}

Mat u1(double theta) { return u3(0.0, 0.0, theta); }

Mat rotation(Axis axis, double theta) {
  switch (axis) {
    case Axis::x:
      return u3(theta, -pi / 2.0, pi / 2.0);
    case Axis::y:
      return u3(theta, 0.0, 0.0);
    case Axis::z:
      return u1(theta);
  }
  throw error("invalid rotation axis");
}

Mat named_gate(GateId id) {
  const cx i(0.0, 1.0);
  const double r = 1.0 / std::numbers::sqrt2;
  switch (id) {
    case GateId::I:
      return Mat::Identity(2, 2);
    case GateId::X:
      return mat2(0, 1, 1, 0);
    case GateId::Y:
      return mat2(0, -i, i, 0);
    case GateId::Z:
      return mat2(1, 0, 0, -1);
    case GateId::H:
      return mat2(r, r, r, -r);
    case GateId::S:
      return mat2(1, 0, 0, i);
    case GateId::Sdg:
      return mat2(1, 0, 0, -i);
    case GateId::T:
      return mat2(1, 0, 0, std::polar(1.0, pi / 4.0));
    case GateId::Tdg:
      return mat2(1, 0, 0, std::polar(1.0, -pi / 4.0));
    case GateId::CNOT:
      return controlled(named_gate(GateId::X));
    case GateId::CZ:
      return controlled(named_gate(GateId::Z));
    case GateId::CH:
      return controlled(named_gate(GateId::H));
    case GateId::CCNOT: {
      Mat m = Mat::Identity(8, 8);
      m(6, 6) = 0;
      m(7, 7) = 0;
      m(6, 7) = 1;
      m(7, 6) = 1;
      return m;
    }
    case GateId::SWAP: {
      Mat m = Mat::Identity(4, 4);
      m(1, 1) = 0;
      m(2, 2) = 0;
      m(1, 2) = 1;
      m(2, 1) = 1;
      return m;
    }
    case GateId::RX:
    case GateId::RY:
    case GateId::RZ:
    case GateId::U1:
    case GateId::U3:
    case GateId::CU1:
      throw error("gate " + gate_name(id) +
                  " is parametrized; use u1/u3/rotation with angles");
  }
  throw error("unknown gate id");
}

Mat named_gate(const std::string& name) {
  const auto id = gate_id_from_name(name);
  if (!id) throw error("unknown gate name: " + name);
  return named_gate(*id);
}

Mat controlled(const Mat& u, bool negated) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw size_error("controlled() expects a 2x2 matrix");
  }
  if (unitarity_defect(u) > kUnitaryTol) {
    throw unitarity_error("controlled() expects a unitary matrix");
  }
  Mat m = Mat::Identity(4, 4);
  const int offset = negated ? 0 : 2;
  m.block<2, 2>(offset, offset) = u;
  return m;
}

Mat base_matrix(const GateApplication& g) {
  switch (g.id) {
    case GateId::RX:
      return rotation(Axis::x, g.params.at(0));
    case GateId::RY:
      return rotation(Axis::y, g.params.at(0));
    case GateId::RZ:
      return rotation(Axis::z, g.params.at(0));
    case GateId::U1:
    case GateId::CU1:
      return u1(g.params.at(0));
    case GateId::U3:
      return u3(g.params.at(0), g.params.at(1), g.params.at(2));
    case GateId::CNOT:
    case GateId::CCNOT:
      return named_gate(GateId::X);
    case GateId::CZ:
      return named_gate(GateId::Z);
    case GateId::CH:
      return named_gate(GateId::H);
    case GateId::SWAP:
      return named_gate(GateId::SWAP);
    default:
      return named_gate(g.id);
  }
}

std::vector<int> operand_qubits(const GateApplication& g) {
  std::vector<int> qubits;
  qubits.reserve(g.controls.size() + g.targets.size());
  for (const auto& c : g.controls) qubits.push_back(c.qubit);
  for (const int t : g.targets) qubits.push_back(t);
  return qubits;
}

Mat operand_matrix(const GateApplication& g) {
  const Mat base = base_matrix(g);
  const int nc = static_cast<int>(g.controls.size());
  if (nc == 0) return base;

  // Identity except on the block where every control matches its polarity.
  const auto base_dim = base.rows();
  const auto full_dim = static_cast<Eigen::Index>((std::size_t{1} << nc) *
                                                  base_dim);
  Mat m = Mat::Identity(full_dim, full_dim);
  std::size_t trigger = 0;
  for (int c = 0; c < nc; ++c) {
    if (!g.controls[static_cast<std::size_t>(c)].negated) {
      trigger |= std::size_t{1} << (nc - 1 - c);
    }
  }
  const auto offset = static_cast<Eigen::Index>(trigger) * base_dim;
  m.block(offset, offset, base_dim, base_dim) = base;
  return m;
}

void validate_gate(const GateApplication& g, int n_qubits) {
  const auto& info = gate_table().at(g.id);
  if (static_cast<int>(g.params.size()) != info.params) {
    throw error("gate " + info.name + " takes " +
                std::to_string(info.params) + " angle(s), got " +
                std::to_string(g.params.size()));
  }
  if (static_cast<int>(g.controls.size()) != info.controls) {
    throw error("gate " + info.name + " takes " +
                std::to_string(info.controls) + " control(s), got " +
                std::to_string(g.controls.size()));
  }
  if (static_cast<int>(g.targets.size()) != info.targets) {
    throw error("gate " + info.name + " takes " +
                std::to_string(info.targets) + " target(s), got " +
                std::to_string(g.targets.size()));
  }
  const auto operands = operand_qubits(g);
  for (std::size_t i = 0; i < operands.size(); ++i) {
    if (operands[i] < 1 || operands[i] > n_qubits) {
      throw index_error("gate " + info.name + ": qubit " +
                        std::to_string(operands[i]) + " out of range 1.." +
                        std::to_string(n_qubits));
    }
    for (std::size_t j = i + 1; j < operands.size(); ++j) {
      if (operands[i] == operands[j]) {
        throw index_error("gate " + info.name + ": duplicate operand qubit " +
                          std::to_string(operands[i]));
      }
    }
  }
}

GateApplication dagger_gate(const GateApplication& g) {
  GateApplication d = g;
  switch (g.id) {
    case GateId::S:
      d.id = GateId::Sdg;
      break;
    case GateId::Sdg:
      d.id = GateId::S;
      break;
    case GateId::T:
      d.id = GateId::Tdg;
      break;
    case GateId::Tdg:
      d.id = GateId::T;
      break;
    case GateId::RX:
    case GateId::RY:
    case GateId::RZ:
    case GateId::U1:
    case GateId::CU1:
      d.params[0] = -g.params[0];
      break;
    case GateId::U3:
      // u3(θ,φ,λ)† = u3(-θ,-λ,-φ)
      d.params[0] = -g.params[0];
      d.params[1] = -g.params[2];
      d.params[2] = -g.params[1];
      break;
    default:
      break;  // self-adjoint
  }
  return d;
}

Circuit dagger_circuit(const Circuit& c) {
  Circuit d;
  d.n_qubits = c.n_qubits;
  d.name = c.name.empty() ? "" : c.name + "-dagger";
  d.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    d.gates.push_back(dagger_gate(*it));
  }
  return d;
}

std::vector<GateApplication> lower_ccnot(const GateApplication& g) {
  const int c1 = g.controls.at(0).qubit;
  const int c2 = g.controls.at(1).qubit;
  const int t = g.targets.at(0);

  std::vector<GateApplication> seq;
  // Standard 6-CNOT Toffoli network, exact up to phase +1.
  seq.push_back(g1(GateId::H, t));
  seq.push_back(gcnot(c2, t));
  seq.push_back(g1(GateId::Tdg, t));
  seq.push_back(gcnot(c1, t));
  seq.push_back(g1(GateId::T, t));
  seq.push_back(gcnot(c2, t));
  seq.push_back(g1(GateId::Tdg, t));
  seq.push_back(gcnot(c1, t));
  seq.push_back(g1(GateId::T, c2));
  seq.push_back(g1(GateId::T, t));
  seq.push_back(gcnot(c1, c2));
  seq.push_back(g1(GateId::H, t));
  seq.push_back(g1(GateId::T, c1));
  seq.push_back(g1(GateId::Tdg, c2));
  seq.push_back(gcnot(c1, c2));

  // Negated controls become X conjugation around the normal-control network.
  std::vector<GateApplication> wrapped;
  for (const auto& ctrl : g.controls) {
    if (ctrl.negated) wrapped.push_back(g1(GateId::X, ctrl.qubit));
  }
  std::vector<GateApplication> out = wrapped;
  out.insert(out.end(), seq.begin(), seq.end());
  out.insert(out.end(), wrapped.begin(), wrapped.end());
  return out;
}

Circuit decompose_toffoli() {
  Circuit c;
  c.n_qubits = 3;
  c.name = "toffoli-lowered";
  c.gates = lower_ccnot(gccnot(1, 2, 3));
  return c;
}

std::vector<GateApplication> lower_ch(const GateApplication& g) {
  const auto& ctrl = g.controls.at(0);
  const int t = g.targets.at(0);
  std::vector<GateApplication> seq;
  seq.push_back(g1p(GateId::RY, pi / 4.0, t));
  seq.push_back(gcnot(ctrl.qubit, t, ctrl.negated));
  seq.push_back(g1p(GateId::RY, -pi / 4.0, t));
  return seq;
}

Circuit decompose_ch() {
  Circuit c;
  c.n_qubits = 2;
  c.name = "ch-lowered";
  c.gates = lower_ch(gch(1, 2));
  return c;
}

std::vector<GateApplication> lower_cu1(const GateApplication& g) {
  const auto& ctrl = g.controls.at(0);
  const int t = g.targets.at(0);
  const double theta = g.params.at(0);
  std::vector<GateApplication> seq;
  // A negated control cannot be pushed onto the CNOTs here (the relative
  // phases end up on the wrong branch), so conjugate the control with X.
  if (ctrl.negated) seq.push_back(g1(GateId::X, ctrl.qubit));
  seq.push_back(g1p(GateId::U1, theta / 2.0, ctrl.qubit));
  seq.push_back(gcnot(ctrl.qubit, t));
  seq.push_back(g1p(GateId::U1, -theta / 2.0, t));
  seq.push_back(gcnot(ctrl.qubit, t));
  seq.push_back(g1p(GateId::U1, theta / 2.0, t));
  if (ctrl.negated) seq.push_back(g1(GateId::X, ctrl.qubit));
  return seq;
}

Circuit decompose_cu1(double theta) {
  Circuit c;
  c.n_qubits = 2;
  c.name = "cu1-lowered";
  c.gates = lower_cu1(gcu1(theta, 1, 2));
  return c;
}

std::vector<GateApplication> lower_composites(const Circuit& c) {
  std::vector<GateApplication> out;
  for (const auto& g : c.gates) {
    switch (g.id) {
      case GateId::CCNOT: {
        const auto seq = lower_ccnot(g);
        out.insert(out.end(), seq.begin(), seq.end());
        break;
      }
      case GateId::CH: {
        const auto seq = lower_ch(g);
        out.insert(out.end(), seq.begin(), seq.end());
        break;
      }
      default:
        out.push_back(g);
        break;
    }
  }
  return out;
}

namespace {

GateApplication as_u3_x(int qubit) { return gu3(pi, 0.0, pi, qubit); }

void emit_single(const GateApplication& g, std::vector<GateApplication>& out) {
  const int t = g.targets.at(0);
  switch (g.id) {
    case GateId::I:
      out.push_back(g1p(GateId::U1, 0.0, t));
      break;
    case GateId::X:
      out.push_back(as_u3_x(t));
      break;
    case GateId::Y:
      out.push_back(gu3(pi, pi / 2.0, pi / 2.0, t));
      break;
    case GateId::Z:
      out.push_back(g1p(GateId::U1, pi, t));
      break;
    case GateId::H:
      out.push_back(gu3(pi / 2.0, 0.0, pi, t));
      break;
    case GateId::S:
      out.push_back(g1p(GateId::U1, pi / 2.0, t));
      break;
    case GateId::Sdg:
      out.push_back(g1p(GateId::U1, -pi / 2.0, t));
      break;
    case GateId::T:
      out.push_back(g1p(GateId::U1, pi / 4.0, t));
      break;
    case GateId::Tdg:
      out.push_back(g1p(GateId::U1, -pi / 4.0, t));
      break;
    case GateId::RX:
      out.push_back(gu3(g.params.at(0), -pi / 2.0, pi / 2.0, t));
      break;
    case GateId::RY:
      out.push_back(gu3(g.params.at(0), 0.0, 0.0, t));
      break;
    case GateId::RZ:
      out.push_back(g1p(GateId::U1, g.params.at(0), t));
      break;
    case GateId::U1:
    case GateId::U3:
      out.push_back(g);
      break;
    default:
      throw error("emit_single: not a single-qubit gate");
  }
}

void transpile_gate(const GateApplication& g,
                    std::vector<GateApplication>& out) {
  switch (g.id) {
    case GateId::CNOT: {
      const auto& ctrl = g.controls.at(0);
      if (ctrl.negated) {
        out.push_back(as_u3_x(ctrl.qubit));
        out.push_back(gcnot(ctrl.qubit, g.targets.at(0)));
        out.push_back(as_u3_x(ctrl.qubit));
      } else {
        out.push_back(g);
      }
      break;
    }
    case GateId::CZ: {
      // Lowered through CU1(π): two CNOTs.
      GateApplication cu = gcu1(pi, g.controls.at(0).qubit, g.targets.at(0));
      cu.controls[0].negated = g.controls.at(0).negated;
      transpile_gate(cu, out);
      break;
    }
    case GateId::CU1:
      for (const auto& sub : lower_cu1(g)) transpile_gate(sub, out);
      break;
    case GateId::CH:
      for (const auto& sub : lower_ch(g)) transpile_gate(sub, out);
      break;
    case GateId::CCNOT:
      for (const auto& sub : lower_ccnot(g)) transpile_gate(sub, out);
      break;
    case GateId::SWAP: {
      const int a = g.targets.at(0);
      const int b = g.targets.at(1);
      out.push_back(gcnot(a, b));
      out.push_back(gcnot(b, a));
      out.push_back(gcnot(a, b));
      break;
    }
    default:
      emit_single(g, out);
      break;
  }
}

}  // namespace

Circuit transpile(const Circuit& c) {
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.name = c.name.empty() ? "" : c.name + "-transpiled";
  for (const auto& g : c.gates) {
    validate_gate(g, c.n_qubits);
    transpile_gate(g, out.gates);
  }
  return out;
}

Mat circuit_unitary(const Circuit& c) {
  if (c.n_qubits < 1 || c.n_qubits > 8) {
    throw size_error("circuit_unitary supports 1..8 qubits, got " +
                     std::to_string(c.n_qubits));
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.n_qubits);
  Mat u = Mat::Identity(dim, dim);
  for (const auto& g : c.gates) {
    validate_gate(g, c.n_qubits);
    // Embed the operand matrix: entry (r, c) nonzero only when the
    // non-operand bits agree.
    const Mat op = operand_matrix(g);
    const auto operands = operand_qubits(g);
    const int k = static_cast<int>(operands.size());
    std::vector<std::size_t> masks(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      masks[static_cast<std::size_t>(i)] = std::size_t{1}
                                           << (c.n_qubits - operands[i]);
    }
    std::size_t union_mask = 0;
    for (const auto m : masks) union_mask |= m;
    Mat embedded = Mat::Zero(dim, dim);
    const std::size_t sub = std::size_t{1} << k;
    for (std::size_t base = 0; base < static_cast<std::size_t>(dim); ++base) {
      if (base & union_mask) continue;
      for (std::size_t r = 0; r < sub; ++r) {
        std::size_t row = base;
        for (int b = 0; b < k; ++b) {
          if (r & (sub >> 1 >> b)) row |= masks[static_cast<std::size_t>(b)];
        }
        for (std::size_t cc = 0; cc < sub; ++cc) {
          std::size_t col = base;
          for (int b = 0; b < k; ++b) {
            if (cc & (sub >> 1 >> b)) {
              col |= masks[static_cast<std::size_t>(b)];
            }
          }
          embedded(static_cast<Eigen::Index>(row),
                   static_cast<Eigen::Index>(col)) =
              op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cc));
        }
      }
    }
    u = embedded * u;
  }
  return u;
}

int cnot_count(const Circuit& c, CnotConvention convention) {
  if (convention == CnotConvention::transpiled) {
    int count = 0;
    for (const auto& g : transpile(c).gates) {
      if (g.id == GateId::CNOT) ++count;
    }
    return count;
  }
  // Nominal tally: fixed two-qubit-gate costs; CH is free.
  int count = 0;
  for (const auto& g : c.gates) {
    switch (g.id) {
      case GateId::CNOT:
        count += 1;
        break;
      case GateId::CCNOT:
        count += 6;
        break;
      case GateId::CZ:
      case GateId::CU1:
        count += 2;
        break;
      case GateId::SWAP:
        count += 3;
        break;
      default:
        break;
    }
  }
  return count;
}

double phase_aligned_distance(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw size_error("phase_aligned_distance: shape mismatch");
  }
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  const cx pivot_a = a(r, c);
  const cx pivot_b = b(r, c);
  if (std::abs(pivot_b) < 1e-14) {
    return (a - b).cwiseAbs().maxCoeff();
  }
  const cx phase = pivot_a / pivot_b * std::abs(pivot_b) / std::abs(pivot_a);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Mat& u) {
  return (u.adjoint() * u - Mat::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

GateApplication g1(GateId id, int target) {
  GateApplication g;
  g.id = id;
  g.targets = {target};
  return g;
}

GateApplication g1p(GateId id, double angle, int target) {
  GateApplication g;
  g.id = id;
  g.params = {angle};
  g.targets = {target};
  return g;
}

GateApplication gu3(double theta, double phi, double lambda, int target) {
  GateApplication g;
  g.id = GateId::U3;
  g.params = {theta, phi, lambda};
  g.targets = {target};
  return g;
}

GateApplication gcnot(int control, int target, bool negated) {
  GateApplication g;
  g.id = GateId::CNOT;
  g.controls = {{control, negated}};
  g.targets = {target};
  return g;
}

GateApplication gch(int control, int target) {
  GateApplication g;
  g.id = GateId::CH;
  g.controls = {{control, false}};
  g.targets = {target};
  return g;
}

GateApplication gcz(int control, int target) {
  GateApplication g;
  g.id = GateId::CZ;
  g.controls = {{control, false}};
  g.targets = {target};
  return g;
}

GateApplication gcu1(double theta, int control, int target) {
  GateApplication g;
  g.id = GateId::CU1;
  g.params = {theta};
  g.controls = {{control, false}};
  g.targets = {target};
  return g;
}

GateApplication gccnot(int c1, int c2, int target, bool neg1, bool neg2) {
  GateApplication g;
  g.id = GateId::CCNOT;
  g.controls = {{c1, neg1}, {c2, neg2}};
  g.targets = {target};
  return g;
}

GateApplication gswap(int a, int b) {
  GateApplication g;
  g.id = GateId::SWAP;
  g.targets = {a, b};
  return g;
}

}  // namespace qadd::gates
