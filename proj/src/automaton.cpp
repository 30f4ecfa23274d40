#include "tmhankel/automaton.hpp"

#include "tmhankel/closed_form.hpp"
#include "tmhankel/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <string>

namespace tmhankel {

std::string_view to_string(ColumnSelector selector) {
  switch (selector) {
    case ColumnSelector::H0: return "h0";
    case ColumnSelector::H1: return "h1";
    case ColumnSelector::Sigma0: return "s0";
    case ColumnSelector::Sigma1: return "s1";
  }
  return "?";
}

std::optional<ColumnSelector> parse_column_selector(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  for (auto s : {ColumnSelector::H0, ColumnSelector::H1, ColumnSelector::Sigma0, ColumnSelector::Sigma1}) {
    if (lower == to_string(s)) return s;
  }
  return std::nullopt;
}

UnitOrZero column_value(ColumnSelector selector, const BigInt& n) {
  switch (selector) {
    case ColumnSelector::H0: return h_col0(n);
    case ColumnSelector::H1: return h_col1(n);
    case ColumnSelector::Sigma0: return sigma_col0(n);
    case ColumnSelector::Sigma1: return sigma_col1(n);
  }
  throw IndexOutOfRange("column_value: unknown selector");
}

UnitOrZero Dfao::run(const BigInt& n) const {
  std::size_t state = initial;
  BigInt k = n;
  BigInt q;
  while (sgn(k) > 0) {
    const unsigned long digit = mpz_fdiv_q_ui(q.get_mpz_t(), k.get_mpz_t(), 3);
    state = transitions[state][digit];
    k = q;
  }
  return outputs[state];
}

nlohmann::ordered_json Dfao::to_json() const {
  nlohmann::ordered_json states = nlohmann::ordered_json::array();
  for (const UnitOrZero out : outputs) states.push_back({{"output", to_string(out)}});
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& t : transitions) edges.push_back({t[0], t[1], t[2]});
  return {{"states", std::move(states)},
          {"transitions", std::move(edges)},
          {"initial", initial},
          {"digit_order", "lsd"}};
}

namespace {

// The kernel sequence n ↦ v(stride·n + offset).
struct KernelSequence {
  BigInt stride;
  BigInt offset;
};

std::vector<int> prefix_of(ColumnSelector selector, const KernelSequence& seq, std::size_t len) {
  std::vector<int> codes;
  codes.reserve(len);
  BigInt index = seq.offset;
  for (std::size_t i = 0; i < len; ++i) {
    codes.push_back(column_value(selector, index).code());
    index += seq.stride;
  }
  return codes;
}

}  // namespace

Dfao kernel_dfao(ColumnSelector selector, std::size_t prefix_len) {
  if (prefix_len < kMinPrefixLength) {
    throw InvalidSize("kernel_dfao: prefix_len must be at least " + std::to_string(kMinPrefixLength));
  }

  Dfao dfao;
  std::vector<KernelSequence> sequences;
  std::map<std::vector<int>, std::size_t> index_of;
  std::deque<std::size_t> pending;

  auto intern = [&](KernelSequence seq) -> std::size_t {
    auto prefix = prefix_of(selector, seq, prefix_len);
    if (auto it = index_of.find(prefix); it != index_of.end()) return it->second;
    const std::size_t id = sequences.size();
    if (id >= kMaxKernelStates) {
      throw NonConvergence("kernel_dfao: more than " + std::to_string(kMaxKernelStates) + " states for column " +
                           std::string(to_string(selector)));
    }
    dfao.outputs.push_back(UnitOrZero::from_code(prefix.front()));
    dfao.transitions.push_back({0, 0, 0});
    index_of.emplace(std::move(prefix), id);
    sequences.push_back(std::move(seq));
    pending.push_back(id);
    return id;
  };

  dfao.initial = intern({1, 0});
  while (!pending.empty()) {
    const std::size_t id = pending.front();
    pending.pop_front();
    for (unsigned digit = 0; digit < 3; ++digit) {
      // v(s·(3n + d) + o) = v(3s·n + (s·d + o))
      const KernelSequence& parent = sequences[id];
      KernelSequence child{parent.stride * 3, parent.stride * digit + parent.offset};
      const std::size_t target = intern(std::move(child));
      dfao.transitions[id][digit] = target;
    }
  }

  const std::size_t bound = std::max(prefix_len, kReplayBound);
  for (std::size_t n = 0; n < bound; ++n) {
    const BigInt index(static_cast<unsigned long>(n));
    if (dfao.run(index) != column_value(selector, index)) {
      throw ReplayFailure("kernel_dfao: automaton for column " + std::string(to_string(selector)) +
                          " disagrees with the column at n = " + std::to_string(n));
    }
  }
  return dfao;
}

}  // namespace tmhankel
