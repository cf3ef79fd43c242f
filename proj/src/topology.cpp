#include "contactsurg/topology.hpp"

#include "contactsurg/error.hpp"

namespace contactsurg {

Rational smooth_coefficient(std::int64_t tb, const Rational& r) {
  if (r.is_infinite()) throw Error(ErrorKind::InfiniteCoefficient, "smooth coefficient of contact inf-surgery");
  return Rational(tb) + r;
}

LinkingMatrix generalized_linking_matrix(const ContactDiagram& diagram) {
  validate_diagram(diagram);
  const auto n = static_cast<Eigen::Index>(diagram.components.size());
  LinkingMatrix out{{}, IntMatrix::Zero(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& c = diagram.components[static_cast<std::size_t>(i)];
    out.ids.push_back(c.id);
    if (c.coefficient.is_infinite()) {
      throw Error(ErrorKind::InfiniteCoefficient, "component " + c.id + " has coefficient inf");
    }
    const Rational s = smooth_coefficient(component_tb(c), c.coefficient);
    out.matrix(i, i) = s.num();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto lk = linking_between(diagram, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (!lk) {
        throw Error(ErrorKind::MissingLinkingData,
                    "no linking number between " + c.id + " and " + diagram.components[static_cast<std::size_t>(j)].id);
      }
      out.matrix(i, j) = s.den() * Integer(*lk);
    }
  }
  return out;
}

std::optional<Integer> AbelianGroup::order() const {
  if (free_rank > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string AbelianGroup::str() const {
  if (trivial()) return "0";
  std::string out;
  if (free_rank == 1) out = "Z";
  if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  return out;
}

AbelianGroup cokernel(const IntMatrix& m) {
  const auto snf = smith_normal_form<Integer>(m);
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    const Integer& d = snf.d(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = static_cast<std::size_t>(m.rows()) - nonzero;
  return g;
}

AbelianGroup first_homology(const ContactDiagram& diagram) {
  return cokernel(generalized_linking_matrix(diagram).matrix);
}

}  // namespace contactsurg
