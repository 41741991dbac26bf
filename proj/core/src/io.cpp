#include "fuzzn/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fuzzn/errors.hpp"

namespace fuzzn::io {

using json = nlohmann::ordered_json;

namespace {

json term_to_json(const SideTerm& t) {
  json j;
  switch (t.kind) {
    case SideTerm::Kind::Affine:
      j["kind"] = "affine";
      j["a0"] = t.a0;
      j["a1"] = t.a1;
      break;
    case SideTerm::Kind::Power:
      j["kind"] = "power";
      j["coef"] = t.coef;
      j["m"] = t.m;
      j["q"] = t.q;
      j["e"] = t.e;
      break;
    case SideTerm::Kind::HermiteInverse: {
      j["kind"] = "hermite_inverse";
      j["coef"] = t.coef;
      json nodes = json::array();
      for (const auto& n : t.nodes) nodes.push_back({n.x, n.alpha, n.slope});
      j["nodes"] = std::move(nodes);
      break;
    }
  }
  return j;
}

SideTerm term_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "affine") {
    return SideTerm::affine(j.at("a0").get<double>(), j.at("a1").get<double>());
  }
  if (kind == "power") {
    return SideTerm::power(j.at("coef").get<double>(), j.at("m").get<double>(),
                           j.at("q").get<double>(), j.at("e").get<double>());
  }
  if (kind == "hermite_inverse") {
    std::vector<HermiteNode> nodes;
    for (const auto& n : j.at("nodes")) {
      nodes.push_back({n.at(0).get<double>(), n.at(1).get<double>(), n.at(2).get<double>()});
    }
    return SideTerm::hermite_inverse(j.at("coef").get<double>(), std::move(nodes));
  }
  throw ParseError("unknown side term kind '" + kind + "'");
}

json piece_to_json(const Piece& p) {
  json j;
  j["kind"] = Piece::kind_name(p.kind());
  j["domain"] = {p.domain().lo, p.domain().hi};
  json params;
  switch (p.kind()) {
    case Piece::Kind::Constant:
      params["c"] = p.const_c();
      break;
    case Piece::Kind::Linear:
      params["a"] = p.lin_a();
      params["b"] = p.lin_b();
      break;
    case Piece::Kind::Quadratic:
      params["a"] = p.quad_a();
      params["b"] = p.quad_b();
      params["c"] = p.quad_c();
      break;
    case Piece::Kind::InverseGenerator:
      params["exponent"] = p.generator().exponent();
      params["p"] = p.gen_p();
      params["sign"] = p.gen_sign();
      params["center"] = p.gen_center();
      break;
    case Piece::Kind::MonotoneHermite: {
      json nodes = json::array();
      for (const auto& n : p.nodes()) nodes.push_back({n.x, n.alpha, n.slope});
      params["nodes"] = std::move(nodes);
      break;
    }
    case Piece::Kind::SideInverse: {
      params["increasing"] = p.side_increasing();
      params["alpha_lo"] = p.side_segment().alpha_lo;
      params["alpha_hi"] = p.side_segment().alpha_hi;
      json terms = json::array();
      for (const auto& t : p.side_segment().terms) terms.push_back(term_to_json(t));
      params["terms"] = std::move(terms);
      break;
    }
  }
  j["params"] = std::move(params);
  return j;
}

Piece piece_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  Interval d{j.at("domain").at(0).get<double>(), j.at("domain").at(1).get<double>()};
  const json& params = j.at("params");
  if (kind == "constant") {
    return Piece::constant(d, params.at("c").get<double>());
  }
  if (kind == "linear") {
    return Piece::linear(d, params.at("a").get<double>(), params.at("b").get<double>());
  }
  if (kind == "quadratic") {
    return Piece::quadratic(d, params.at("a").get<double>(), params.at("b").get<double>(),
                            params.at("c").get<double>());
  }
  if (kind == "inverse_generator") {
    return Piece::inverse_generator(
        d, GeneratorF::power(params.at("exponent").get<double>()),
        params.at("p").get<double>(), params.at("sign").get<int>(),
        params.value("center", 0.0));
  }
  if (kind == "monotone_hermite") {
    std::vector<HermiteNode> nodes;
    for (const auto& n : params.at("nodes")) {
      nodes.push_back({n.at(0).get<double>(), n.at(1).get<double>(), n.at(2).get<double>()});
    }
    return Piece::monotone_hermite(std::move(nodes));
  }
  if (kind == "side_inverse") {
    SideSegment seg;
    seg.alpha_lo = params.at("alpha_lo").get<double>();
    seg.alpha_hi = params.at("alpha_hi").get<double>();
    for (const auto& t : params.at("terms")) seg.terms.push_back(term_from_json(t));
    return Piece::side_inverse(std::move(seg), params.at("increasing").get<bool>());
  }
  throw ParseError("unknown piece kind '" + kind + "'");
}

}  // namespace

std::string serialize_fuzzy(const FuzzyNumber& u) {
  json j;
  json f;
  f["support"] = {u.support_lo(), u.support_hi()};
  f["core"] = {u.core_lo(), u.core_hi()};
  json left = json::array();
  for (const Piece& p : u.left()) left.push_back(piece_to_json(p));
  json right = json::array();
  for (const Piece& p : u.right()) right.push_back(piece_to_json(p));
  f["left"] = std::move(left);
  f["right"] = std::move(right);
  j["fuzzy_number"] = std::move(f);
  return j.dump(2) + "\n";
}

FuzzyNumber parse_fuzzy(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  try {
    const json& f = j.at("fuzzy_number");
    double s_lo = f.at("support").at(0).get<double>();
    double s_hi = f.at("support").at(1).get<double>();
    double c_lo = f.at("core").at(0).get<double>();
    double c_hi = f.at("core").at(1).get<double>();
    std::vector<Piece> left, right;
    for (const auto& p : f.at("left")) left.push_back(piece_from_json(p));
    for (const auto& p : f.at("right")) right.push_back(piece_from_json(p));
    return FuzzyNumber::validate(s_lo, s_hi, c_lo, c_hi, std::move(left), std::move(right));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed fuzzy_number: ") + e.what());
  }
}

FuzzyNumber load_fuzzy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_fuzzy(buf.str());
  } catch (ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (ValidationError& e) {
    throw ValidationError(e.code(), path + ": " + e.what());
  }
}

std::string serialize_smoother_spec(const SmootherSpec& s) {
  json j;
  json m;
  m["p"] = s.p;
  m["c_l"] = s.c_l;
  m["c_r"] = s.c_r;
  m["s_l"] = s.s_l;
  m["s_r"] = s.s_r;
  m["defensive_l"] = s.defensive_l;
  m["defensive_r"] = s.defensive_r;
  j["smoother_spec"] = std::move(m);
  return j.dump(2) + "\n";
}

SmootherSpec parse_smoother_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  try {
    const json& m = j.at("smoother_spec");
    SmootherSpec s;
    s.p = m.at("p").get<double>();
    s.c_l = m.at("c_l").get<double>();
    s.c_r = m.at("c_r").get<double>();
    s.s_l = m.at("s_l").get<std::vector<double>>();
    s.s_r = m.at("s_r").get<std::vector<double>>();
    s.defensive_l = m.value("defensive_l", std::vector<double>{});
    s.defensive_r = m.value("defensive_r", std::vector<double>{});
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed smoother_spec: ") + e.what());
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string analysis_csv(const AnalysisReport& report) {
  std::ostringstream os;
  os << "x,side,kind,level,beta,gamma,left_slope,right_slope\n";
  for (const SingularPoint& s : report.singulars) {
    os << format_double(s.x) << ','
       << (s.side == BranchSide::Left ? "left" : "right") << ','
       << (s.kind == SingularKind::Kink ? "kink" : "jump") << ','
       << format_double(s.level) << ',' << format_double(s.left_limit) << ','
       << format_double(s.right_limit) << ',' << format_double(s.left_slope) << ','
       << format_double(s.right_slope) << '\n';
  }
  return os.str();
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "p,d_inf,diff_ok\n";
  for (const ConvergenceRow& r : rows) {
    os << format_double(r.p) << ',' << format_double(r.d) << ',' << (r.diff_ok ? 1 : 0)
       << '\n';
  }
  return os.str();
}

}  // namespace fuzzn::io
