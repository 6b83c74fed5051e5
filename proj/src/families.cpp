#include "pcg/families.hpp"

#include <algorithm>
#include <array>

#include "pcg/error.hpp"

namespace pcg {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  bool takes_parameter;
};

constexpr std::array<FamilyInfo, 10> kFamilies{{
    {Family::Ghz3, "ghz3", false},
    {Family::Phi4, "phi4", false},
    {Family::Phi4Prime, "phi4_prime", false},
    {Family::Phi4DoublePrime, "phi4_double_prime", false},
    {Family::PhiN, "phi_n", true},
    {Family::Phi5, "phi5", false},
    {Family::Phi2n3, "phi_2n3", true},
    {Family::Fig1a, "fig1a", false},
    {Family::Fig1b, "fig1b", false},
    {Family::Fig1c, "fig1c", false},
}};

QubitSet support_of(std::initializer_list<int> qubits) {
  QubitSet s = 0;
  for (int q : qubits) s |= qubit_bit(q);
  return s;
}

PcgStateSpec canonical(int n, std::vector<Component> components) {
  std::sort(components.begin(), components.end(),
            [](const Component& a, const Component& b) {
              return support_lex_less(a.support, b.support);
            });
  return {n, std::move(components)};
}

// |0..0> minus every two-qubit support, n >= 4.
PcgStateSpec make_phi_n(int n) {
  if (n < 4) throw PcgError("phi_n needs a parameter of at least 4");
  if (n > kMaxQubits) throw PcgError("phi_n parameter too large");
  std::vector<Component> components{{1, 0}};
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      components.push_back({-1, support_of({i, j})});
    }
  }
  return canonical(n, std::move(components));
}

// 2n+3 qubits: |0..0> minus every co-singleton support, n >= 1.
PcgStateSpec make_phi_2n3(int n) {
  if (n < 1) throw PcgError("phi_2n3 needs a parameter of at least 1");
  const int qubits = 2 * n + 3;
  if (qubits > kMaxQubits) throw PcgError("phi_2n3 parameter too large");
  std::vector<Component> components{{1, 0}};
  const QubitSet full = full_set(qubits);
  for (int i = 1; i <= qubits; ++i) {
    components.push_back({-1, full & ~qubit_bit(i)});
  }
  return canonical(qubits, std::move(components));
}

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  for (const FamilyInfo& info : kFamilies) {
    if (info.name == name) return info.family;
  }
  return std::nullopt;
}

std::string_view family_name(Family family) {
  for (const FamilyInfo& info : kFamilies) {
    if (info.family == family) return info.name;
  }
  return "";
}

bool family_takes_parameter(Family family) {
  for (const FamilyInfo& info : kFamilies) {
    if (info.family == family) return info.takes_parameter;
  }
  return false;
}

std::vector<std::string> family_names() {
  std::vector<std::string> names;
  names.reserve(kFamilies.size());
  for (const FamilyInfo& info : kFamilies) names.emplace_back(info.name);
  return names;
}

PcgStateSpec generate(const FamilyId& id) {
  if (family_takes_parameter(id.family)) {
    if (!id.parameter) {
      throw PcgError(std::string(family_name(id.family)) + " needs a parameter");
    }
  } else if (id.parameter) {
    throw PcgError(std::string(family_name(id.family)) + " takes no parameter");
  }

  switch (id.family) {
    case Family::Ghz3:
      return canonical(3, {{1, 0},
                           {-1, support_of({2, 3})},
                           {-1, support_of({1, 3})},
                           {-1, support_of({1, 2})}});
    case Family::Phi4:
      return make_phi_n(4);
    case Family::Phi4Prime:
      return canonical(4, {{1, 0},
                           {-1, support_of({2, 4})},
                           {-1, support_of({2, 3})},
                           {-1, support_of({1, 4})},
                           {-1, support_of({1, 3})},
                           {-1, support_of({1, 2})}});
    case Family::Phi4DoublePrime:
      return canonical(4, {{1, 0},
                           {1, support_of({2, 4})},
                           {1, support_of({2, 3})},
                           {1, support_of({1, 4})},
                           {1, support_of({1, 3})},
                           {-1, support_of({1, 2})}});
    case Family::PhiN:
      return make_phi_n(*id.parameter);
    case Family::Phi5:
      return make_phi_2n3(1);
    case Family::Phi2n3:
      return make_phi_2n3(*id.parameter);
    case Family::Fig1a:
      return canonical(3, {{1, support_of({3})},
                           {1, support_of({2})},
                           {-1, support_of({1})}});
    case Family::Fig1b:
      return canonical(4, {{1, 0},
                           {-1, support_of({1, 2, 4})},
                           {1, support_of({3, 4})}});
    case Family::Fig1c:
      return canonical(3, {{1, 0},
                           {1, support_of({2, 3})},
                           {-1, support_of({1, 3})},
                           {1, support_of({1, 2})}});
  }
  throw PcgError("unknown family");
}

}  // namespace pcg
