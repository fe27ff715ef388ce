#include "lrdip/runtime.hpp"

#include <algorithm>
#include <sstream>

namespace lrdip {

LocalView::LocalView(const Network& net, const Transcript& t, uint32_t v)
    : net_(net), t_(t), v_(v) {}

bool LocalView::visible(uint32_t node) const {
  if (node == v_) return true;
  for (auto& ie : net_.adj[v_])
    if (ie.peer == node) return true;
  return false;
}

const Bits& LocalView::label(uint32_t round, uint32_t node) const {
  if (!visible(node)) throw std::logic_error("label access outside locality");
  return t_.node_label(round, node);
}

const Bits& LocalView::coins(uint32_t round, uint32_t node) const {
  if (!visible(node)) throw std::logic_error("coin access outside locality");
  return t_.coin(round, node);
}

const Bits& LocalView::edge_label(uint32_t round, uint32_t edge_id) const {
  bool ok = false;
  for (auto& ie : net_.adj[v_]) ok = ok || ie.edge_id == edge_id;
  if (!ok) throw std::logic_error("edge label access outside locality");
  return t_.edge_label(round, edge_id);
}

namespace {

void account_round(const Protocol& proto, const Round& round, RunReport& rep) {
  const Network& net = proto.net();
  uint32_t nmax = 0, emax = 0;
  if (round.kind == RoundKind::Prover) {
    for (auto& b : round.node_labels) nmax = std::max(nmax, b.size());
    for (auto& b : round.edge_labels) emax = std::max(emax, b.size());
    rep.proof_size_bits = std::max({rep.proof_size_bits, nmax, emax});
  } else {
    for (auto& b : round.coins) nmax = std::max(nmax, b.size());
    rep.coin_bits_max = std::max(rep.coin_bits_max, nmax);
  }
  rep.round_max_node_bits.push_back(nmax);
  rep.round_max_edge_bits.push_back(emax);
  (void)net;
}

void finish_accounting(const Protocol& proto, const Transcript& t,
                       RunReport& rep) {
  const Network& net = proto.net();
  uint32_t worst = 0;
  for (uint32_t v = 0; v < net.n; ++v) {
    uint64_t total = 0;
    for (auto& round : t.rounds) {
      if (round.kind == RoundKind::Prover) {
        total += round.node_labels[v].size();
        if (!round.edge_labels.empty())
          for (auto& ie : net.adj[v]) total += round.edge_labels[ie.edge_id].size();
      } else {
        total += round.coins[v].size();
      }
    }
    worst = std::max(worst, uint32_t(total));
  }
  rep.total_bits_per_node = worst;
}

RunReport run_impl(const Protocol& proto, ProverStrategy* strategy,
                   const CoinPrf* prf,
                   const std::vector<std::vector<Bits>>* forced,
                   Transcript* transcript_out) {
  ProverStrategy honest;
  if (!strategy) strategy = &honest;
  const Network& net = proto.net();
  Transcript t;
  RunReport rep;
  rep.rounds = proto.num_rounds();
  uint32_t vround = 0;
  for (uint32_t r = 0; r < proto.num_rounds(); ++r) {
    Round round;
    round.kind = proto.round_kind(r);
    if (round.kind == RoundKind::Prover) {
      round.node_labels.assign(net.n, Bits());
      round.edge_labels.assign(net.edges.size(), Bits());
      strategy->prover_round(proto, r, t, round);
      if (round.node_labels.size() != net.n ||
          round.edge_labels.size() != net.edges.size())
        throw std::logic_error("strategy resized label vectors");
      Schema sch = proto.schema(r);
      for (auto& b : round.node_labels)
        if (b.size() > sch.node_bits) rep.width_violation = true;
      for (auto& b : round.edge_labels)
        if (b.size() > sch.edge_bits) rep.width_violation = true;
    } else {
      round.coins.assign(net.n, Bits());
      if (forced) {
        if (vround >= forced->size())
          throw std::invalid_argument("missing forced coins for a round");
        round.coins = (*forced)[vround];
        if (round.coins.size() != net.n)
          throw std::invalid_argument("forced coin vector has wrong size");
      } else {
        proto.draw_coins(r, *prf, t, round);
      }
      ++vround;
    }
    account_round(proto, round, rep);
    t.rounds.push_back(std::move(round));
  }

  rep.node_verdicts.assign(net.n, 1);
  bool all = !rep.width_violation;
  for (uint32_t v = 0; v < net.n; ++v) {
    LocalView view(net, t, v);
    bool ok = proto.decide_node(v, view);
    rep.node_verdicts[v] = ok ? 1 : 0;
    all = all && ok;
  }
  rep.accepted = all;
  finish_accounting(proto, t, rep);
  if (transcript_out) *transcript_out = std::move(t);
  return rep;
}

}  // namespace

RunReport run_protocol(const Protocol& proto, ProverStrategy* strategy,
                       uint64_t seed, Transcript* transcript_out) {
  CoinPrf prf(seed);
  return run_impl(proto, strategy, &prf, nullptr, transcript_out);
}

RunReport run_with_forced_coins(const Protocol& proto, ProverStrategy* strategy,
                                const std::vector<std::vector<Bits>>& coins,
                                Transcript* transcript_out) {
  return run_impl(proto, strategy, nullptr, &coins, transcript_out);
}

RunReport decide_transcript(const Protocol& proto, const Transcript& t) {
  const Network& net = proto.net();
  RunReport rep;
  rep.rounds = uint32_t(t.rounds.size());
  for (auto& round : t.rounds) account_round(proto, round, rep);
  rep.node_verdicts.assign(net.n, 1);
  bool all = true;
  for (uint32_t v = 0; v < net.n; ++v) {
    LocalView view(net, t, v);
    bool ok = proto.decide_node(v, view);
    rep.node_verdicts[v] = ok ? 1 : 0;
    all = all && ok;
  }
  rep.accepted = all;
  finish_accounting(proto, t, rep);
  return rep;
}

std::string dump_transcript(const Protocol& proto, const Transcript& t) {
  std::ostringstream out;
  out << "protocol " << proto.name() << " rounds " << t.rounds.size() << "\n";
  for (uint32_t r = 0; r < t.rounds.size(); ++r) {
    const Round& round = t.rounds[r];
    if (round.kind == RoundKind::Prover) {
      for (uint32_t v = 0; v < round.node_labels.size(); ++v)
        if (round.node_labels[v].size())
          out << r << " node " << v << " " << round.node_labels[v].size()
              << " " << round.node_labels[v].to_hex() << "\n";
      for (uint32_t e = 0; e < round.edge_labels.size(); ++e)
        if (round.edge_labels[e].size())
          out << r << " edge " << e << " " << round.edge_labels[e].size()
              << " " << round.edge_labels[e].to_hex() << "\n";
    } else {
      for (uint32_t v = 0; v < round.coins.size(); ++v)
        if (round.coins[v].size())
          out << r << " coin " << v << " " << round.coins[v].size() << " "
              << round.coins[v].to_hex() << "\n";
    }
  }
  return out.str();
}

Transcript parse_transcript(const Protocol& proto, const std::string& text) {
  const Network& net = proto.net();
  Transcript t;
  t.rounds.resize(proto.num_rounds());
  for (uint32_t r = 0; r < proto.num_rounds(); ++r) {
    t.rounds[r].kind = proto.round_kind(r);
    if (t.rounds[r].kind == RoundKind::Prover) {
      t.rounds[r].node_labels.assign(net.n, Bits());
      t.rounds[r].edge_labels.assign(net.edges.size(), Bits());
    } else {
      t.rounds[r].coins.assign(net.n, Bits());
    }
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.rfind("protocol", 0) == 0) continue;
    std::istringstream ls(line);
    uint32_t r, id, width;
    std::string kind, hex;
    ls >> r >> kind >> id >> width >> hex;
    if (!ls && width != 0) throw std::invalid_argument("bad transcript line");
    if (width == 0) hex.clear();
    Bits b = Bits::from_hex(hex, width);
    if (r >= t.rounds.size()) throw std::invalid_argument("round out of range");
    if (kind == "node")
      t.rounds[r].node_labels.at(id) = b;
    else if (kind == "edge")
      t.rounds[r].edge_labels.at(id) = b;
    else if (kind == "coin")
      t.rounds[r].coins.at(id) = b;
    else
      throw std::invalid_argument("bad transcript record: " + kind);
  }
  return t;
}

}  // namespace lrdip
