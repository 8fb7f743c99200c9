#include "ea/state.hpp"

#include "ea/simplex.hpp"

#include <sstream>

namespace ea {

StateDecision decide_state(const EffectAlgebra& alg, const OrderStructure& order,
                           const RationalMatrix& seq_matrix) {
  RankReport ranks = rank_report(seq_matrix);
  if (!ranks.ranks_equal()) {
    NoStateCertificate cert;
    cert.kind = NoStateCertificate::Kind::RankMismatch;
    cert.rank_a = ranks.rank_a;
    cert.rank_b = ranks.rank_b;
    if (!verify_no_state(seq_matrix, cert).ok()) {
      throw std::logic_error("rank-mismatch certificate failed self-verification");
    }
    return cert;
  }

  std::vector<Rational> ones(seq_matrix.rows(), 1);
  FeasibilityResult fs = solve_nonnegative(seq_matrix, ones);

  if (!fs.feasible) {
    NoStateCertificate cert;
    cert.kind = NoStateCertificate::Kind::Farkas;
    cert.farkas_y = fs.farkas_y;
    if (!verify_no_state(seq_matrix, cert).ok()) {
      throw std::logic_error("Farkas certificate failed self-verification");
    }
    return cert;
  }

  StateCertificate cert;
  cert.atom_weights = fs.solution;
  cert.values.assign(alg.size(), 0);
  for (ElementId x = 0; x < alg.size(); ++x) {
    AtomVector k = decompose(alg, order, x);
    Rational h = 0;
    for (size_t t = 0; t < k.size(); ++t) h += k[t] * cert.atom_weights[t];
    cert.values[x] = h;
  }
  VerificationReport check = verify_state(alg, cert);
  if (!check.ok()) {
    // The two lemmas guarantee this cannot happen on valid input.
    std::string detail = check.problems.empty() ? "" : (": " + check.problems.front());
    throw std::logic_error("constructed state failed verification" + detail);
  }
  return cert;
}

VerificationReport verify_state(const EffectAlgebra& alg, const StateCertificate& cert) {
  VerificationReport report;
  const int n = alg.size();

  OrderStructure order = derive_order(alg);
  const size_t m = order.atoms.size();
  if (cert.atom_weights.size() != m) {
    report.problems.push_back("atom weight count != atom count");
    return report;
  }
  if (static_cast<int>(cert.values.size()) != n) {
    report.problems.push_back("value count != element count");
    return report;
  }

  for (size_t t = 0; t < m; ++t) {
    if (cert.atom_weights[t] < 0) {
      report.problems.push_back("negative weight for atom " + alg.name(order.atoms[t]));
    }
  }

  SeqSet seq = enumerate_seq(alg, order);
  for (const AtomVector& row : seq.rows) {
    Rational dot = 0;
    for (size_t t = 0; t < m; ++t) dot += row[t] * cert.atom_weights[t];
    if (dot != 1) {
      std::ostringstream os;
      os << "unit decomposition (";
      for (size_t t = 0; t < m; ++t) os << (t ? "," : "") << row[t];
      os << ") has weight " << to_string(dot) << " != 1";
      report.problems.push_back(os.str());
    }
  }

  if (cert.values[kZero] != 0) report.problems.push_back("h(0) != 0");
  if (cert.values[alg.unit()] != 1) report.problems.push_back("h(1) != 1");

  for (size_t t = 0; t < m; ++t) {
    if (cert.values[order.atoms[t]] != cert.atom_weights[t]) {
      report.problems.push_back("h(" + alg.name(order.atoms[t]) + ") differs from its atom weight");
    }
  }

  for (ElementId x = 0; x < n; ++x) {
    if (cert.values[x] < 0 || cert.values[x] > 1) {
      report.problems.push_back("h(" + alg.name(x) + ") = " + to_string(cert.values[x]) +
                                " outside [0,1]");
    }
  }

  for (ElementId p = 0; p < n; ++p) {
    for (ElementId q = 0; q < n; ++q) {
      ElementId pq = alg.sum(p, q);
      if (pq == kNoSum) continue;
      Rational lhs = cert.values[p] + cert.values[q];
      if (lhs > 1) {
        report.problems.push_back("h(" + alg.name(p) + ")+h(" + alg.name(q) + ") > 1");
      }
      if (cert.values[pq] != lhs) {
        report.problems.push_back("h(" + alg.name(p) + "+" + alg.name(q) + ") != h(" +
                                  alg.name(p) + ")+h(" + alg.name(q) + ")");
      }
    }
  }

  return report;
}

VerificationReport verify_no_state(const RationalMatrix& seq_matrix, const NoStateCertificate& cert) {
  VerificationReport report;
  if (cert.kind == NoStateCertificate::Kind::RankMismatch) {
    int ra = rank(seq_matrix);
    int rb = rank(augment_ones(seq_matrix));
    if (ra != cert.rank_a) {
      report.problems.push_back("claimed rank A = " + std::to_string(cert.rank_a) +
                                ", recomputed " + std::to_string(ra));
    }
    if (rb != cert.rank_b) {
      report.problems.push_back("claimed rank (A|1) = " + std::to_string(cert.rank_b) +
                                ", recomputed " + std::to_string(rb));
    }
    if (cert.rank_a == cert.rank_b) {
      report.problems.push_back("claimed ranks are equal; no mismatch to certify");
    }
    return report;
  }

  if (static_cast<int>(cert.farkas_y.size()) != seq_matrix.rows()) {
    report.problems.push_back("Farkas vector length != row count");
    return report;
  }
  for (int j = 0; j < seq_matrix.cols(); ++j) {
    Rational dot = 0;
    for (int i = 0; i < seq_matrix.rows(); ++i) dot += cert.farkas_y[i] * seq_matrix.at(i, j);
    if (dot > 0) {
      report.problems.push_back("y'A has positive component " + std::to_string(j));
    }
  }
  Rational total = 0;
  for (const Rational& y : cert.farkas_y) total += y;
  if (!(total > 0)) {
    report.problems.push_back("y'1 = " + to_string(total) + " is not positive");
  }
  return report;
}

std::string serialize_certificate(const EffectAlgebra& alg, const StateDecision& decision) {
  std::ostringstream os;
  if (const auto* cert = std::get_if<StateCertificate>(&decision)) {
    os << "certificate: state\n";
    OrderStructure order = derive_order(alg);
    for (size_t t = 0; t < order.atoms.size(); ++t) {
      os << "atom " << alg.name(order.atoms[t]) << " = " << to_string(cert->atom_weights[t])
         << "\n";
    }
    for (ElementId x = 0; x < alg.size(); ++x) {
      os << "value " << alg.name(x) << " = " << to_string(cert->values[x]) << "\n";
    }
    return os.str();
  }
  const auto& cert = std::get<NoStateCertificate>(decision);
  os << "certificate: no-state\n";
  if (cert.kind == NoStateCertificate::Kind::RankMismatch) {
    os << "reason: rank-mismatch\n";
    os << "rank-a: " << cert.rank_a << "\n";
    os << "rank-b: " << cert.rank_b << "\n";
  } else {
    os << "reason: farkas\n";
    os << "y:";
    for (const Rational& y : cert.farkas_y) os << " " << to_string(y);
    os << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

StateDecision parse_certificate(const EffectAlgebra& alg, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::string kind, reason;
  std::vector<std::pair<std::string, Rational>> atoms, values;
  std::vector<Rational> farkas;
  int rank_a = -1, rank_b = -1;
  bool have_farkas = false;

  while (std::getline(is, line)) {
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    try {
      if (tokens[0] == "certificate:" && tokens.size() == 2) {
        kind = tokens[1];
      } else if (tokens[0] == "reason:" && tokens.size() == 2) {
        reason = tokens[1];
      } else if (tokens[0] == "rank-a:" && tokens.size() == 2) {
        rank_a = std::stoi(tokens[1]);
      } else if (tokens[0] == "rank-b:" && tokens.size() == 2) {
        rank_b = std::stoi(tokens[1]);
      } else if (tokens[0] == "y:") {
        have_farkas = true;
        for (size_t i = 1; i < tokens.size(); ++i) farkas.push_back(parse_rational(tokens[i]));
      } else if ((tokens[0] == "atom" || tokens[0] == "value") && tokens.size() == 4 &&
                 tokens[2] == "=") {
        auto& dst = tokens[0] == "atom" ? atoms : values;
        dst.emplace_back(tokens[1], parse_rational(tokens[3]));
      } else {
        throw CertificateError("unrecognized certificate line: " + line);
      }
    } catch (const std::invalid_argument& e) {
      throw CertificateError(std::string("bad number in certificate: ") + e.what());
    }
  }

  if (kind == "state") {
    OrderStructure order = derive_order(alg);
    StateCertificate cert;
    cert.atom_weights.assign(order.atoms.size(), 0);
    cert.values.assign(alg.size(), 0);
    std::vector<char> seen_atom(order.atoms.size(), 0), seen_value(alg.size(), 0);
    for (const auto& [name, weight] : atoms) {
      ElementId id = alg.id_of(name);
      auto it = std::find(order.atoms.begin(), order.atoms.end(), id);
      if (it == order.atoms.end()) throw CertificateError("'" + name + "' is not an atom");
      size_t t = it - order.atoms.begin();
      cert.atom_weights[t] = weight;
      seen_atom[t] = 1;
    }
    for (const auto& [name, value] : values) {
      ElementId id = alg.id_of(name);
      if (id == kNoSum) throw CertificateError("unknown element '" + name + "'");
      cert.values[id] = value;
      seen_value[id] = 1;
    }
    for (size_t t = 0; t < seen_atom.size(); ++t) {
      if (!seen_atom[t]) throw CertificateError("missing atom weight for " + alg.name(order.atoms[t]));
    }
    for (ElementId x = 0; x < alg.size(); ++x) {
      if (!seen_value[x]) throw CertificateError("missing value for " + alg.name(x));
    }
    return cert;
  }
  if (kind == "no-state") {
    NoStateCertificate cert;
    if (reason == "rank-mismatch") {
      if (rank_a < 0 || rank_b < 0) throw CertificateError("rank-mismatch certificate needs rank-a and rank-b");
      cert.kind = NoStateCertificate::Kind::RankMismatch;
      cert.rank_a = rank_a;
      cert.rank_b = rank_b;
      return cert;
    }
    if (reason == "farkas") {
      if (!have_farkas) throw CertificateError("farkas certificate needs a y: line");
      cert.kind = NoStateCertificate::Kind::Farkas;
      cert.farkas_y = std::move(farkas);
      return cert;
    }
    throw CertificateError("unknown no-state reason '" + reason + "'");
  }
  throw CertificateError("missing or unknown certificate kind");
}

}  // namespace ea
