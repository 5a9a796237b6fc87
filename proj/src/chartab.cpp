#include "pglcat/chartab.hpp"

#include <istream>
#include <numeric>
#include <map>
#include <sstream>

#include "pglcat/csv.hpp"
#include "pglcat/embedded_data.hpp"
#include "pglcat/errors.hpp"

namespace pglcat {

CharacterTable CharacterTable::parse(std::istream& in) {
  CharacterTable t;
  std::string line;
  unsigned lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = parse_csv_line(line);
    try {
      if (cols[0] == "group") {
        if (cols.size() != 4) throw DataError("header needs group,<label>,<order>,<exponent>");
        t.label_ = cols[1];
        t.order_ = Int(cols[2]);
        t.exponent_ = static_cast<unsigned>(std::stoul(cols[3]));
        have_header = true;
      } else if (cols[0] == "class") {
        if (cols.size() != 5) throw DataError("class line needs 5 fields");
        t.classes_.push_back(ConjClass{cols[1], Int(cols[2]), Int(cols[3]),
                                       static_cast<unsigned>(std::stoul(cols[4]))});
      } else if (cols[0] == "chi") {
        if (cols.size() != 2 + t.classes_.size())
          throw DataError("character line needs one value per class");
        ClassFunction chi;
        for (size_t i = 2; i < cols.size(); ++i)
          chi.push_back(parse_cyclo(cols[i], t.exponent_));
        t.irreducibles_.push_back(std::move(chi));
      } else {
        throw DataError("unknown record type '" + cols[0] + "'");
      }
    } catch (const std::exception& e) {
      throw DataError("character table line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw DataError("character table is missing its group header");
  t.validate();
  return t;
}

CharacterTable CharacterTable::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

void CharacterTable::validate() const {
  Int size_sum = 0;
  for (const auto& c : classes_) {
    size_sum += c.size;
    if (c.size * c.centralizer != order_)
      throw DataError("table " + label_ + ": class " + c.name +
                      " violates size * centralizer = order");
  }
  if (size_sum != order_)
    throw DataError("table " + label_ + ": class sizes do not sum to the group order");
  Int degree_sq = 0;
  for (const auto& chi : irreducibles_) {
    if (!chi[0].is_rational()) throw DataError("table " + label_ + ": irrational degree");
    Rat deg = chi[0].rational_value();
    degree_sq += deg.get_num() * deg.get_num();
  }
  if (!irreducibles_.empty() && degree_sq != order_)
    throw DataError("table " + label_ + ": degrees fail the sum-of-squares identity");
  for (size_t i = 0; i < irreducibles_.size(); ++i)
    for (size_t j = i; j < irreducibles_.size(); ++j) {
      Rat ip = inner_product(*this, irreducibles_[i], irreducibles_[j]);
      if (ip != (i == j ? Rat(1) : Rat(0)))
        throw DataError("table " + label_ + ": row orthogonality fails at (" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
}

size_t CharacterTable::class_index(const std::string& name) const {
  for (size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].name == name) return i;
  throw DataError("table " + label_ + ": no class named " + name);
}

const ClassFunction& CharacterTable::irreducible(size_t index) const {
  if (index >= irreducibles_.size())
    throw DataError("table " + label_ + ": no irreducible #" + std::to_string(index));
  return irreducibles_[index];
}

ClassFunction CharacterTable::trivial_character() const {
  return ClassFunction(classes_.size(), CycloNumber(1, exponent_));
}

Fusion Fusion::parse(std::istream& in, const CharacterTable& sub, const CharacterTable& ambient) {
  Fusion f;
  f.sub_ = &sub;
  f.ambient_ = &ambient;
  f.map_.assign(sub.classes().size(), static_cast<size_t>(-1));
  std::string line;
  unsigned lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = parse_csv_line(line);
    if (cols[0] == "fusion") {
      if (cols.size() != 4) throw DataError("fusion header needs fusion,<sub>,<ambient>,<index>");
      if (cols[1] != sub.label() || cols[2] != ambient.label())
        throw DataError("fusion file is for " + cols[1] + " <= " + cols[2] +
                        ", not the supplied tables");
      f.index_ = Int(cols[3]);
      have_header = true;
      continue;
    }
    if (cols.size() != 2)
      throw DataError("fusion line " + std::to_string(lineno) + ": need subclass,ambientclass");
    f.map_[sub.class_index(cols[0])] = ambient.class_index(cols[1]);
  }
  if (!have_header) throw DataError("fusion file is missing its header");
  if (ambient.group_order() % sub.group_order() != 0 ||
      ambient.group_order() / sub.group_order() != f.index_)
    throw DataError("fusion index does not match the order ratio");
  for (size_t i = 0; i < f.map_.size(); ++i) {
    if (f.map_[i] == static_cast<size_t>(-1))
      throw DataError("fusion misses subgroup class " + sub.classes()[i].name);
    const ConjClass& h = sub.classes()[i];
    const ConjClass& g = ambient.classes()[f.map_[i]];
    if (h.element_order != g.element_order)
      throw DataError("fusion does not preserve element orders at " + h.name);
    if (g.centralizer % h.centralizer != 0)
      throw DataError("subgroup centralizer does not divide the ambient one at " + h.name);
  }
  return f;
}

Fusion Fusion::parse_text(const std::string& text, const CharacterTable& sub,
                          const CharacterTable& ambient) {
  std::istringstream in(text);
  return parse(in, sub, ambient);
}

Fusion Fusion::unchecked(const CharacterTable& sub, const CharacterTable& ambient,
                         std::vector<size_t> map) {
  Fusion f;
  f.sub_ = &sub;
  f.ambient_ = &ambient;
  f.map_ = std::move(map);
  f.index_ = ambient.group_order() / sub.group_order();
  return f;
}

ClassFunction induce(const ClassFunction& chi, const Fusion& fusion) {
  const CharacterTable& H = fusion.sub();
  const CharacterTable& G = fusion.ambient();
  if (chi.size() != H.classes().size())
    throw DomainError("class function does not match the subgroup table");
  unsigned mod = static_cast<unsigned>(
      std::lcm<unsigned long, unsigned long>(H.exponent(), G.exponent()));
  ClassFunction out(G.classes().size(), CycloNumber(Rat(0), mod));
  for (size_t i = 0; i < chi.size(); ++i) {
    size_t j = fusion.image_of(i);
    CycloNumber term = chi[i].embedded(mod) *
                       CycloNumber(Rat(1) / Rat(H.classes()[i].centralizer), mod);
    out[j] = out[j] + term;
  }
  for (size_t j = 0; j < out.size(); ++j)
    out[j] = out[j] * CycloNumber(Rat(G.classes()[j].centralizer), mod);
  return out;
}

ClassFunction restrict_through(const ClassFunction& phi, const Fusion& fusion) {
  const CharacterTable& H = fusion.sub();
  ClassFunction out;
  out.reserve(H.classes().size());
  for (size_t i = 0; i < H.classes().size(); ++i) out.push_back(phi[fusion.image_of(i)]);
  return out;
}

Rat inner_product(const CharacterTable& table, const ClassFunction& phi,
                  const ClassFunction& psi) {
  if (phi.size() != table.classes().size() || psi.size() != table.classes().size())
    throw DomainError("class functions do not match the table");
  CycloNumber sum;
  for (size_t j = 0; j < phi.size(); ++j) {
    CycloNumber term = phi[j] * psi[j].conjugate();
    term = term * CycloNumber(Rat(table.classes()[j].size), term.modulus());
    sum = sum + term;
  }
  if (!sum.is_rational())
    throw DomainError("inner product is not rational; inputs are not class functions");
  Rat value = sum.rational_value() / Rat(table.group_order());
  value.canonicalize();
  return value;
}

bool frobenius_check(const ClassFunction& tau, const ClassFunction& phi, const Fusion& fusion) {
  try {
    Rat lhs = inner_product(fusion.ambient(), induce(tau, fusion), phi);
    Rat rhs = inner_product(fusion.sub(), tau, restrict_through(phi, fusion));
    return lhs == rhs;
  } catch (const DomainError&) {
    return false;  // a corrupted fusion can push values outside the rationals
  }
}

std::vector<unsigned> decompose(const CharacterTable& table, const ClassFunction& phi) {
  std::vector<unsigned> mult;
  for (size_t i = 0; i < table.irreducibles().size(); ++i) {
    Rat m = inner_product(table, phi, table.irreducible(i));
    if (m < 0 || m.get_den() != 1)
      throw DomainError("not a character: multiplicity " + m.get_str() +
                        " against irreducible #" + std::to_string(i + 1));
    mult.push_back(static_cast<unsigned>(m.get_num().get_ui()));
  }
  // The reconstruction must give phi back (tables are complete).
  unsigned mod = table.exponent();
  for (size_t j = 0; j < phi.size(); ++j) {
    CycloNumber acc(Rat(0), mod);
    for (size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] == 0) continue;
      acc = acc + table.irreducible(i)[j] * CycloNumber(Rat(mult[i]), mod);
    }
    if (!(acc == phi[j])) throw DomainError("not a character: reconstruction mismatch");
  }
  return mult;
}

bool is_irreducible(const CharacterTable& table, const ClassFunction& phi) {
  decompose(table, phi);  // throws if phi is not a character
  return inner_product(table, phi, phi) == Rat(1);
}

const CharacterTable& embedded_table(const std::string& name) {
  static const std::map<std::string, CharacterTable> tables = [] {
    std::map<std::string, CharacterTable> m;
    m.emplace("A4", CharacterTable::parse_text(embedded::chartab_a4_ctab));
    m.emplace("A5", CharacterTable::parse_text(embedded::chartab_a5_ctab));
    m.emplace("S4", CharacterTable::parse_text(embedded::chartab_s4_ctab));
    m.emplace("PSL(2,7)", CharacterTable::parse_text(embedded::chartab_psl27_ctab));
    return m;
  }();
  auto it = tables.find(name);
  if (it == tables.end()) throw DataError("no embedded character table named " + name);
  return it->second;
}

const Fusion& embedded_fusion(const std::string& name) {
  static const std::map<std::string, Fusion> fusions = [] {
    std::map<std::string, Fusion> m;
    m.emplace("A4<A5", Fusion::parse_text(embedded::chartab_a4_in_a5_fus, embedded_table("A4"),
                                          embedded_table("A5")));
    m.emplace("S4<PSL(2,7)",
              Fusion::parse_text(embedded::chartab_s4_in_psl27_fus, embedded_table("S4"),
                                 embedded_table("PSL(2,7)")));
    return m;
  }();
  auto it = fusions.find(name);
  if (it == fusions.end()) throw DataError("no embedded fusion named " + name);
  return it->second;
}

}  // namespace pglcat
