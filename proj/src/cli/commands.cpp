#include "contactsurg/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

#include "contactsurg/continued_fraction.hpp"
#include "contactsurg/diagram_io.hpp"
#include "contactsurg/surgery.hpp"
#include "contactsurg/topology.hpp"
#include "json.hpp"

namespace contactsurg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
}

// Maps library errors onto exit codes; stdout never carries diagnostics.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConversionError& e) {
    for (const auto& [id, what] : e.failures()) err << "error: component " << id << ": " << what << "\n";
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

// Left-aligned plain-text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<Integer>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += xs[i].str();
  }
  return s + "]";
}

// Same convention as the file schema: a number when it fits in int64.
Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Json integers_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(integer_json(x));
  return out;
}

Json invariants_json(const ComponentInvariants& inv) {
  return {{"tb", inv.tb},
          {"rot", inv.rot},
          {"writhe", inv.writhe},
          {"cusps", inv.cusps()},
          {"left_down", inv.left_down},
          {"left_up", inv.left_up},
          {"right_down", inv.right_down},
          {"right_up", inv.right_up}};
}

std::vector<std::string> invariants_row(const std::string& id, const ComponentInvariants& inv) {
  return {id,
          std::to_string(inv.tb),
          std::to_string(inv.rot),
          std::to_string(inv.writhe),
          std::to_string(inv.cusps()),
          std::to_string(inv.left_down),
          std::to_string(inv.left_up),
          std::to_string(inv.right_down),
          std::to_string(inv.right_up),
          "front"};
}

const std::vector<std::string> kInvariantHeader = {"component", "tb",     "rot",  "writhe", "cusps",
                                                   "L-down",    "L-up",   "R-down", "R-up", "source"};

std::string instruction_line(const PmOneInstruction& i) {
  std::ostringstream os;
  os << (i.coefficient > 0 ? "+1" : "-1") << "  level " << i.level << "  tb_local " << i.tb_local << "  rot " << i.rot
     << "  " << to_string(i.provenance);
  return os.str();
}

void print_result(const PmOneDiagram& d, const VerifyReport& report, std::ostream& out) {
  out << "policy: " << d.policy << "\n";
  for (const auto& id : d.dropped) out << id << ": coefficient inf, dropped\n";
  for (const auto& chain : d.chains) {
    out << chain.parent << ": contact " << chain.coefficient << "-surgery -> " << chain.instructions.size()
        << " instruction(s)\n";
    for (const auto& i : chain.instructions) out << "  " << instruction_line(i) << "\n";
    if (chain.certificate) {
      const auto& c = *chain.certificate;
      out << "  certificate: cf " << join(c.cf) << "  target " << c.target << "  slope " << c.slope << "  k " << c.k
          << "  count " << c.tight_count << "\n";
    }
  }
  out << "verify: " << (report.clauses.size() - report.failures()) << "/" << report.clauses.size()
      << " clauses passed\n";
}

Json report_json(const VerifyReport& report) {
  Json clauses = Json::array();
  for (const auto& c : report.clauses) {
    Json item = {{"parent", c.parent}, {"clause", c.clause}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    clauses.push_back(item);
  }
  return {{"passed", report.passed()}, {"clauses", clauses}};
}

Rational parse_coefficient(const std::string& r) { return Rational::parse(r); }

std::string file_stem(const std::string& path) {
  const auto stem = std::filesystem::path(path).stem().string();
  return stem.empty() || path == "-" ? std::string("stdin") : stem;
}

}  // namespace

int cmd_invariants(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DiagramFile file = parse_diagram_file(read_file(path));
    Json rows = Json::array();
    Table table(kInvariantHeader);
    for (const auto& c : file.diagram.components) {
      if (const auto* word = std::get_if<FrontWord>(&c.knot)) {
        const auto inv = component_invariants(OrientedFront(*word), 0);
        Json row = {{"id", c.id}, {"source", "front"}};
        row.update(invariants_json(inv));
        rows.push_back(row);
        table.add(invariants_row(c.id, inv));
      } else {
        const auto& data = std::get<LegendrianKnotData>(c.knot);
        rows.push_back({{"id", c.id}, {"source", "data"}, {"tb", data.tb}, {"rot", data.rot}, {"type", data.type}});
        table.add({c.id, std::to_string(data.tb), std::to_string(data.rot), "-", "-", "-", "-", "-", "-",
                   "data (" + data.type + ")"});
      }
    }
    if (json) {
      out << Json{{"components", rows}}.dump(2) << "\n";
    } else {
      table.print(out);
    }
    return kOk;
  });
}

int cmd_front_invariants(const std::string& front_json, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const OrientedFront front(parse_front(front_json));
    Json rows = Json::array();
    Table table(kInvariantHeader);
    for (std::size_t c = 0; c < front.components(); ++c) {
      const auto inv = component_invariants(front, c);
      Json row = {{"id", std::to_string(c)}, {"source", "front"}};
      row.update(invariants_json(inv));
      rows.push_back(row);
      table.add(invariants_row(std::to_string(c), inv));
    }
    Json links = Json::array();
    Table lk_table({"a", "b", "lk"});
    for (std::size_t a = 0; a < front.components(); ++a) {
      for (std::size_t b = a + 1; b < front.components(); ++b) {
        const auto lk = linking_number(front, a, b);
        links.push_back({{"a", a}, {"b", b}, {"lk", lk}});
        lk_table.add({std::to_string(a), std::to_string(b), std::to_string(lk)});
      }
    }
    if (json) {
      out << Json{{"components", rows}, {"linking", links}}.dump(2) << "\n";
    } else {
      table.print(out);
      if (front.components() > 1) {
        out << "\n";
        lk_table.print(out);
      }
    }
    return kOk;
  });
}

int cmd_convert(const std::string& path, const ConvertOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DiagramFile file = parse_diagram_file(read_file(path));
    std::string policy_text = "all-negative";
    bool enumerate = options.enumerate;
    if (file.options) {
      if (file.options->policy) policy_text = *file.options->policy;
      if (file.options->enumerate) enumerate = enumerate || *file.options->enumerate;
    }
    if (options.policy) policy_text = *options.policy;
    const StabilizationPolicy policy = StabilizationPolicy::parse(policy_text);
    if (options.out_dir) std::filesystem::create_directories(*options.out_dir);
    const std::string stem = file_stem(path);

    bool all_passed = true;
    if (!enumerate) {
      const PmOneDiagram result = convert(file.diagram, policy);
      const VerifyReport report = verify(result);
      all_passed = report.passed();
      if (options.out_dir) write_file(*options.out_dir / (stem + ".pm1.json"), dump_result(result));
      if (options.json) {
        out << dump_result(result);
      } else {
        print_result(result, report, out);
      }
    } else {
      if (options.policy) err << "note: --policy is ignored when enumerating\n";
      std::size_t index = 0;
      enumerate_conversions(file.diagram, [&](const PmOneDiagram& d) {
        const VerifyReport report = verify(d);
        all_passed = all_passed && report.passed();
        if (options.out_dir) {
          write_file(*options.out_dir / (stem + "." + std::to_string(index) + ".pm1.json"), dump_result(d));
        }
        if (options.json) {
          out << dump_result(d, true);
        } else {
          out << "# diagram " << index << "\n";
          print_result(d, report, out);
        }
        ++index;
        return true;
      });
      if (!options.json) out << index << " diagram(s)\n";
    }
    if (!all_passed) {
      err << "error: certificate verification failed\n";
      return kCertificate;
    }
    return kOk;
  });
}

int cmd_cf(const std::string& r, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NegCF cf = neg_cf_expand(parse_coefficient(r));
    if (json) {
      out << Json{{"r", parse_coefficient(r).str()},
                  {"cf", integers_json(cf.entries())},
                  {"surgery_coefficients", integers_json(cf.surgery_coefficients())}}
                 .dump()
          << "\n";
    } else {
      out << join(cf.entries()) << "\n";
    }
    return kOk;
  });
}

int cmd_slope(const std::string& r, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rs = neg_cf_expand(parse_coefficient(r)).surgery_coefficients();
    const Rational slope = boundary_slope(rs);
    if (json) {
      out << Json{{"r", parse_coefficient(r).str()}, {"slope", slope.str()}}.dump() << "\n";
    } else {
      out << slope << "\n";
    }
    return kOk;
  });
}

int cmd_count(const std::string& r, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Rational value = parse_coefficient(r);
    Integer count = 1;
    if (value.is_finite() && value.sign() < 0) {
      count = tight_count(neg_cf_expand(value).surgery_coefficients());
    } else if (value.is_finite() && value.sign() > 0) {
      const Integer k = minimal_twist(value);
      count = tight_count(neg_cf_expand(Rational(value.num(), value.den() - k * value.num())).surgery_coefficients());
    }
    if (json) {
      out << Json{{"r", value.str()}, {"count", integer_json(count)}}.dump() << "\n";
    } else {
      out << count << "\n";
    }
    return kOk;
  });
}

int cmd_homology(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DiagramFile file = parse_diagram_file(read_file(path));
    const LinkingMatrix lm = generalized_linking_matrix(file.diagram);
    const AbelianGroup group = cokernel(lm.matrix);
    if (json) {
      Json matrix = Json::array();
      for (Eigen::Index i = 0; i < lm.matrix.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < lm.matrix.cols(); ++j) row.push_back(integer_json(lm.matrix(i, j)));
        matrix.push_back(row);
      }
      const auto order = group.order();
      out << Json{{"group", group.str()},
                  {"free_rank", group.free_rank},
                  {"torsion", integers_json(group.torsion)},
                  {"order", order ? integer_json(*order) : Json(nullptr)},
                  {"ids", lm.ids},
                  {"matrix", matrix}}
                 .dump(2)
          << "\n";
    } else {
      out << group.str() << "\n";
    }
    return kOk;
  });
}

int cmd_verify(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string text = read_file(path);
    std::vector<PmOneDiagram> diagrams;
    std::string version;
    try {
      version = document_version(text);
    } catch (const Error&) {
      // JSON Lines input; parse_results handles it.
    }
    if (version == kDiagramVersion) {
      const DiagramFile file = parse_diagram_file(text);
      const auto policy = StabilizationPolicy::parse(
          file.options && file.options->policy ? *file.options->policy : std::string("all-negative"));
      diagrams.push_back(convert(file.diagram, policy));
    } else {
      diagrams = parse_results(text);
    }

    bool all_passed = true;
    Json reports = Json::array();
    for (std::size_t d = 0; d < diagrams.size(); ++d) {
      const VerifyReport report = verify(diagrams[d]);
      all_passed = all_passed && report.passed();
      if (json) {
        reports.push_back(report_json(report));
        continue;
      }
      if (diagrams.size() > 1) out << "# diagram " << d << "\n";
      Table table({"component", "clause", "result"});
      for (const auto& c : report.clauses) table.add({c.parent, c.clause, c.passed ? "pass" : "FAIL"});
      table.print(out);
      out << (report.passed() ? "all clauses passed" : std::to_string(report.failures()) + " clause(s) failed")
          << "\n";
    }
    if (json) out << Json{{"passed", all_passed}, {"diagrams", reports}}.dump(2) << "\n";
    return all_passed ? kOk : kCertificate;
  });
}

}  // namespace contactsurg::cli
