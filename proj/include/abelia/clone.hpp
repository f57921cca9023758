#ifndef ABELIA_CLONE_HPP_
#define ABELIA_CLONE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "caps.hpp"

namespace abelia {

  // An immutable term over variables x1..xk and the operation symbols of a
  // signature.  Subterms are shared.
  class Term {
   public:
    static Term variable(unsigned index);  // 0-based; prints as x<index+1>
    static Term apply(std::size_t op, std::string name, std::vector<Term> args);

    bool is_variable() const;
    unsigned variable_index() const;
    std::size_t op() const;
    std::string const& op_name() const;
    std::vector<Term> const& args() const;

    std::size_t size() const;           // node count
    std::size_t operation_count() const;  // non-variable nodes

    // Value of the term at one point of A^k.
    Elem evaluate(FiniteAlgebra const& a, std::span<Elem const> point) const;

    // Prefix form, e.g. add(x1, neg(x2)); the constant zero prints as 0.
    std::string to_string() const;

   private:
    struct Node;
    explicit Term(std::shared_ptr<Node const> node) : _node(std::move(node)) {}
    std::shared_ptr<Node const> _node;
  };

  // A k-ary term operation: a table over A^k (row-major, last argument
  // fastest) together with a smallest term realizing it.
  struct TermOp {
    unsigned          arity = 0;
    std::vector<Elem> table;
    Term              witness;
  };

  struct TermOpSet {
    std::vector<TermOp> ops;       // ordered by witness size, then discovery
    bool                complete;  // false if the cap stopped the closure
  };

  // All k-ary term operations of `a`, up to `cap` distinct tables.
  TermOpSet generate_term_ops(FiniteAlgebra const& a,
                              unsigned             arity,
                              std::size_t          cap);

  // Tabulates a term over A^k.
  std::vector<Elem> term_table(FiniteAlgebra const& a,
                               Term const&          t,
                               unsigned             arity);

  enum class SearchStatus { found, none, unknown };

  std::string to_string(SearchStatus status);

  struct TermSearch {
    SearchStatus          status;
    std::optional<TermOp> term;
    std::size_t           generated;  // binary term operations examined
  };

  // First binary term operation s with s(x,x) = 0 and s(x,0) = x.
  TermSearch find_subtraction_term(FiniteAlgebra const& a, Caps const& caps = {});

  // First binary term operation p with p(x,0) = x = p(0,x).
  TermSearch find_unit_term(FiniteAlgebra const& a, Caps const& caps = {});

}  // namespace abelia

#endif
