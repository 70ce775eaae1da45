#pragma once

#include "pcf/decomposition.hpp"

namespace pcf {

/// Built from iota and arrows only.
bool is_pure(const Type& t);

/// f = Com_i<g_1..g_q> at a pure type: no constant or bottom cases exist.
struct PureDecomposition {
  std::size_t head = 0;
  std::vector<Strategy> args;
};

/// Throws when f is not total (bottom), including at iota itself.
PureDecomposition stlc_decompose(const Strategy& f);

/// The long beta-eta normal form denoting a total compact f. Throws if f is
/// not total or if some argument's norm fails to drop below f's.
Term stlc_extract_nf(const Strategy& f);

/// [[m]] for a closed pure term.
Strategy stlc_denote(const Term& m);

/// Every closed long beta-eta normal form of type t with at most
/// `size_bound` AST nodes, ordered by (size, text). Binders are x1, x2, ...
std::vector<Term> enumerate_long_nfs(const Type& t, std::size_t size_bound);

/// Every total strategy at t with norm <= norm_bound.
std::vector<Strategy> enumerate_total(const Type& t, std::size_t norm_bound);

/// beta-normal and eta-long at type t.
bool is_long_normal(const Term& m, const Type& t);

struct CompletenessReport {
  Type type;
  std::size_t nf_size_bound = 0;
  std::size_t norm_bound = 0;
  std::vector<Term> normal_forms;
  std::size_t strategies = 0;
  bool injective = true;
  std::vector<std::string> boundary;  // strategies whose normal form exceeds the size bound
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Bounded bijection check between normal forms and total strategies.
CompletenessReport check_full_completeness(const Type& t, std::size_t nf_size_bound, std::size_t norm_bound);

}  // namespace pcf
