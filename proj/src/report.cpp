#include "z2norm/report.hpp"

#include <istream>
#include <sstream>

#include "z2norm/curve_complex.hpp"

namespace z2norm::report {

using nlohmann::json;

json to_json(const ExtNat& n) {
  if (n.is_infinite()) return "inf";
  return n.value();
}

json to_json(const SurfaceDescription& s) {
  json j;
  j["kind"] = to_string(s.kind);
  j["label"] = s.label;
  j["genus"] = s.genus ? json(*s.genus) : json(nullptr);
  if (s.certificate) {
    json path = json::array();
    for (const auto& v : *s.certificate) path.push_back(v.to_string());
    j["certificate"] = std::move(path);
  } else {
    j["certificate"] = nullptr;
  }
  j["elided"] = s.elided;
  j["norm"] = z2_norm_of(s);
  json parts = json::array();
  for (const auto& c : s.components) parts.push_back(to_json(c));
  j["components"] = std::move(parts);
  return j;
}

namespace {

json translation_json(const GL2Matrix& A, const ReportOptions& opts) {
  json out = json::array();
  for (auto cls : kParityClasses) {
    const auto data = translation_length_orbit(A, cls, std::nullopt, opts.certificate_cap);
    out.push_back({{"class", to_string(cls)},
                   {"l", to_json(data.l)},
                   {"type", to_string(data.type)},
                   {"witness", data.witness ? json(data.witness->to_string()) : json(nullptr)}});
  }
  return out;
}

std::string class_text(const BundleClass& c) {
  return "(t,j,k)=(" + std::to_string(c.t) + "," + std::to_string(c.j) + "," + std::to_string(c.k) + ")";
}

std::string class_text(const SemiBundleClass& c) {
  return "(e1,e2,phi)=(" + std::to_string(c.e1) + "," + std::to_string(c.e2) + "," + std::to_string(c.phi) + ")";
}

std::string surface_text(const SurfaceDescription& s) {
  std::ostringstream os;
  switch (s.kind) {
    case SurfaceKind::Empty: return "empty surface";
    case SurfaceKind::NonOrientable: os << "Pi_" << *s.genus; break;
    case SurfaceKind::Sum: {
      os << "sum of ";
      for (std::size_t i = 0; i < s.components.size(); ++i) os << (i ? " and " : "") << surface_text(s.components[i]);
      return os.str();
    }
    default: os << to_string(s.kind); break;
  }
  if (!s.label.empty()) os << " [" << s.label << "]";
  if (s.kind == SurfaceKind::NonOrientable) {
    if (s.elided) {
      os << " certificate elided";
    } else if (s.certificate) {
      os << " via";
      for (const auto& v : *s.certificate) os << ' ' << v;
    }
  }
  return os.str();
}

}  // namespace

json bundle_json(const GL2Matrix& A, const ReportOptions& opts) {
  const auto h2 = h2_structure(A);
  json valid = json::array();
  for (const auto& [j, k] : h2.valid_jk) valid.push_back({j, k});

  json norms = json::array();
  for (const auto& e : norm_table_bundle(A, opts)) {
    norms.push_back({{"class", {{"t", e.cls.t}, {"j", e.cls.j}, {"k", e.cls.k}}},
                     {"norm", e.norm},
                     {"realizer", to_json(e.realizer)},
                     {"derived_identification", e.derived_identification}});
  }
  const auto pc = periodic_class(A);
  return {{"kind", "bundle"},
          {"matrix", A.to_string()},
          {"det", A.det()},
          {"trace", A.trace()},
          {"geometry", to_string(classify_geometry(A))},
          {"order", to_json(order(A))},
          {"periodic_class", pc ? json("A" + std::to_string(*pc)) : json(nullptr)},
          {"h2",
           {{"case", to_string(h2.kind)},
            {"order", h2.order()},
            {"generators", h2.generators},
            {"valid_jk", valid},
            {"identification", h2.identifies_11 ? json("F_1/1 = F_0/1 + F_1/0") : json(nullptr)}}},
          {"translation_lengths", translation_json(A, opts)},
          {"norms", norms},
          {"mog", to_json(mog_bundle(A))},
          {"meg", meg_bundle(A)}};
}

json semibundle_json(const GL2Matrix& A, const ReportOptions& opts) {
  const auto h2 = h2_structure_semi(A);
  json norms = json::array();
  for (const auto& e : norm_table_semi(A, opts)) {
    norms.push_back({{"class", {{"e1", e.cls.e1}, {"e2", e.cls.e2}, {"phi", e.cls.phi}}},
                     {"norm", e.norm},
                     {"realizer", to_json(e.realizer)}});
  }
  return {{"kind", "semibundle"},
          {"matrix", A.to_string()},
          {"det", A.det()},
          {"trace", A.trace()},
          {"h2", {{"order", h2.order()}, {"generators", h2.generators}, {"b_even", h2.b_even}}},
          {"norms", norms},
          {"mog", to_json(mog_semi(A))},
          {"meg", meg_semi(A)}};
}

json recompute(const json& doc, const ReportOptions& opts) {
  const auto A = GL2Matrix::parse(doc.at("matrix").get<std::string>());
  const auto kind = doc.at("kind").get<std::string>();
  if (kind == "bundle") return bundle_json(A, opts);
  if (kind == "semibundle") return semibundle_json(A, opts);
  throw ParseError("unknown report kind", kind);
}

std::string bundle_text(const GL2Matrix& A, const ReportOptions& opts) {
  std::ostringstream os;
  const auto h2 = h2_structure(A);
  const auto pc = periodic_class(A);
  os << "torus bundle with monodromy " << A << "\n";
  os << "  det " << A.det() << ", trace " << A.trace() << ", order " << order(A) << "\n";
  os << "  geometry " << to_string(classify_geometry(A));
  if (pc) os << " (periodic class A" << *pc << ")";
  os << "\n  H2(M;Z2): " << to_string(h2.kind) << ", order " << h2.order() << ", generators";
  for (const auto& g : h2.generators) os << ' ' << g;
  if (h2.identifies_11) os << " (F_1/1 = F_0/1 + F_1/0)";
  os << "\n  translation lengths:";
  for (auto cls : kParityClasses) {
    const auto data = translation_length_orbit(A, cls, std::nullopt, opts.certificate_cap);
    os << "\n    l_" << to_string(cls) << " = " << data.l << " (" << to_string(data.type) << ")";
  }
  os << "\n  norms:\n";
  for (const auto& e : norm_table_bundle(A, opts)) {
    os << "    " << class_text(e.cls) << "  norm " << e.norm << "  " << surface_text(e.realizer);
    if (e.derived_identification) os << "  (derived identification)";
    os << "\n";
  }
  os << "  mog " << mog_bundle(A) << "\n  meg " << meg_bundle(A) << "\n";
  return os.str();
}

std::string semibundle_text(const GL2Matrix& A, const ReportOptions& opts) {
  std::ostringstream os;
  const auto h2 = h2_structure_semi(A);
  os << "torus semi-bundle with gluing " << A << "\n";
  os << "  H2(N;Z2): order " << h2.order() << ", generators";
  for (const auto& g : h2.generators) os << ' ' << g;
  os << "\n  norms:\n";
  for (const auto& e : norm_table_semi(A, opts))
    os << "    " << class_text(e.cls) << "  norm " << e.norm << "  " << surface_text(e.realizer) << "\n";
  os << "  mog " << mog_semi(A) << "\n  meg " << meg_semi(A) << "\n";
  return os.str();
}

CensusRow census_row(const GL2Matrix& A, ManifoldKind kind) {
  if (kind == ManifoldKind::Bundle)
    return {A, kind, classify_geometry(A), h2_structure(A).order(), norm_multiset_bundle(A), mog_bundle(A), meg_bundle(A)};
  return {A, kind, std::nullopt, h2_structure_semi(A).order(), norm_multiset_semi(A), mog_semi(A), meg_semi(A)};
}

std::vector<CensusInput> parse_census_input(std::istream& in) {
  std::vector<CensusInput> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string matrix, kind, extra;
    if (!(fields >> matrix)) continue;
    fields >> kind;
    if (fields >> extra) throw ParseError("unexpected census field", extra);
    ManifoldKind k = ManifoldKind::Bundle;
    if (kind == "semibundle")
      k = ManifoldKind::SemiBundle;
    else if (!kind.empty() && kind != "bundle")
      throw ParseError("census kind must be bundle or semibundle", kind);
    out.push_back({GL2Matrix::parse(matrix), k});
  }
  return out;
}

std::vector<CensusRow> census(const std::vector<CensusInput>& inputs, Execution exec) {
  if (exec == Execution::Serial) {
    std::vector<CensusRow> rows;
    rows.reserve(inputs.size());
    for (const auto& in : inputs) rows.push_back(census_row(in.matrix, in.kind));
    return rows;
  }
  std::vector<std::optional<CensusRow>> slots(inputs.size());
  std::vector<std::string> errors(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    try {
      slots[i] = census_row(inputs[i].matrix, inputs[i].kind);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  std::vector<CensusRow> rows;
  rows.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!slots[i]) throw DomainError("census row " + std::to_string(i + 1) + ": " + errors[i]);
    rows.push_back(std::move(*slots[i]));
  }
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

std::string csv_header() { return "matrix,kind,det,trace,geometry,h2_order,norms,mog,meg"; }

std::string csv_line(const CensusRow& row) {
  std::string norms;
  for (std::size_t i = 0; i < row.norms.size(); ++i) norms += (i ? "|" : "") + std::to_string(row.norms[i]);
  const std::string fields[] = {row.matrix.to_string(),
                                row.kind == ManifoldKind::Bundle ? "bundle" : "semibundle",
                                std::to_string(row.matrix.det()),
                                std::to_string(row.matrix.trace()),
                                row.geometry ? to_string(*row.geometry) : "",
                                std::to_string(row.h2_order),
                                norms,
                                row.mog.to_string(),
                                std::to_string(row.meg)};
  std::string line;
  for (std::size_t i = 0; i < std::size(fields); ++i) line += (i ? "," : "") + csv_field(fields[i]);
  return line;
}

}  // namespace z2norm::report
