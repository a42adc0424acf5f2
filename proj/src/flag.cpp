#include "poskit/flag.hpp"

#include "poskit/errors.hpp"
#include "poskit/linalg.hpp"

#include <cctype>
#include <cstdlib>

namespace poskit {

namespace {

void check_rank(const CartanType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case CartanFamily::A: ok = n >= 1; break;
    case CartanFamily::B: ok = n >= 2; break;
    case CartanFamily::C: ok = n >= 3; break;
    case CartanFamily::D: ok = n >= 4; break;
    case CartanFamily::E: ok = n == 6 || n == 7 || n == 8; break;
    case CartanFamily::F: ok = n == 4; break;
    case CartanFamily::G: ok = n == 2; break;
  }
  if (!ok)
    throw InputError("invalid Cartan type " + cartan_type_to_string(t) +
                     " (valid ranks: A n>=1, B n>=2, C n>=3, D n>=4, E 6/7/8, F 4, G 2)");
}

char family_letter(CartanFamily f) {
  switch (f) {
    case CartanFamily::A: return 'A';
    case CartanFamily::B: return 'B';
    case CartanFamily::C: return 'C';
    case CartanFamily::D: return 'D';
    case CartanFamily::E: return 'E';
    case CartanFamily::F: return 'F';
    case CartanFamily::G: return 'G';
  }
  return '?';
}

} // namespace

CartanType parse_cartan_type(const std::string& text) {
  if (text.size() < 2)
    throw InputError("cannot parse Cartan type from '" + text + "' (expected e.g. A3, G2)");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  CartanFamily family;
  switch (letter) {
    case 'A': family = CartanFamily::A; break;
    case 'B': family = CartanFamily::B; break;
    case 'C': family = CartanFamily::C; break;
    case 'D': family = CartanFamily::D; break;
    case 'E': family = CartanFamily::E; break;
    case 'F': family = CartanFamily::F; break;
    case 'G': family = CartanFamily::G; break;
    default:
      throw InputError("unknown Cartan family '" + std::string(1, text[0]) + "' in '" + text + "'");
  }
  const std::string digits = text.substr(1);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("cannot parse Cartan rank from '" + text + "'");
  const long rank = std::strtol(digits.c_str(), nullptr, 10);
  CartanType t{family, static_cast<int>(rank)};
  check_rank(t);
  return t;
}

std::string cartan_type_to_string(const CartanType& t) {
  return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

std::vector<IVec> cartan_matrix(const CartanType& t) {
  check_rank(t);
  const int n = t.rank;
  std::vector<IVec> c(n, IVec(n, Int(0)));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j, Int cij, Int cji) {
    c[i][j] = cij;
    c[j][i] = cji;
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
  };
  switch (t.family) {
    case CartanFamily::A:
      chain(0, n - 1);
      break;
    case CartanFamily::B:
      chain(0, n - 2);
      bond(n - 2, n - 1, -2, -1); // short last root
      break;
    case CartanFamily::C:
      chain(0, n - 2);
      bond(n - 2, n - 1, -1, -2); // long last root
      break;
    case CartanFamily::D:
      chain(0, n - 2);
      bond(n - 3, n - 1, -1, -1);
      c[n - 2][n - 1] = 0;
      c[n - 1][n - 2] = 0;
      break;
    case CartanFamily::E:
      // Node 2 hangs off node 4; the rest form the chain 1-3-4-5-...-n.
      bond(0, 2, -1, -1);
      bond(1, 3, -1, -1);
      chain(2, n - 1);
      break;
    case CartanFamily::F:
      bond(0, 1, -1, -1);
      bond(1, 2, -2, -1);
      bond(2, 3, -1, -1);
      break;
    case CartanFamily::G:
      bond(0, 1, -1, -3);
      break;
  }
  // Sanity: the standard Cartan matrices are nonsingular.
  QMat q;
  for (const IVec& row : c) q.push_back(to_rational(row));
  if (rank_of(q) != n) throw InternalError("Cartan matrix of " + cartan_type_to_string(t) + " is singular");
  return c;
}

VarietyModel build_flag_model(const CartanType& t) {
  check_rank(t);
  cartan_matrix(t); // generated and checked internally; only rank and labels feed the model
  VarietyModel model;
  model.name = "flag " + cartan_type_to_string(t);
  model.rank = t.rank;
  for (int i = 1; i <= t.rank; ++i) model.divisor_labels.push_back("D" + std::to_string(i));
  for (int i = 0; i < t.rank; ++i) {
    CurveRecord c;
    c.name = "C" + std::to_string(i + 1);
    c.class_vector.assign(t.rank, Int(0));
    c.class_vector[i] = 1;
    c.distinguished = true;
    model.curves.push_back(std::move(c));
  }
  validate_model(model);
  return model;
}

VarietyModel build_projective_space_model(int n) {
  if (n < 1) throw InputError("projective space model needs n >= 1");
  VarietyModel model;
  model.name = "P" + std::to_string(n);
  model.rank = 1;
  model.divisor_labels = {"H"};
  CurveRecord line;
  line.name = "C";
  line.class_vector = {Int(1)};
  line.distinguished = true;
  model.curves.push_back(std::move(line));
  validate_model(model);
  return model;
}

} // namespace poskit
