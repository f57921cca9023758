#include "abelia/quotient.hpp"

#include "abelia/error.hpp"

namespace abelia {

  Quotient quotient(AlgebraPtr const& a, Congruence const& theta) {
    if (theta.size() != a->size()) {
      throw Error("quotient: congruence on a carrier of size "
                  + std::to_string(theta.size()) + ", algebra has size "
                  + std::to_string(a->size()));
    }
    if (!is_congruence(*a, theta)) {
      throw Error("quotient: partition " + theta.to_string()
                  + " is not compatible with the operations of " + a->name());
    }
    // Least members increase with block number, and 0 is least of all.
    std::vector<Elem> block_of(a->size());
    std::vector<Elem> members;
    for (std::size_t x = 0; x < a->size(); ++x) {
      if (theta.representative(static_cast<Elem>(x)) == x) {
        block_of[x] = static_cast<Elem>(members.size());
        members.push_back(static_cast<Elem>(x));
      } else {
        block_of[x] = block_of[theta.representative(static_cast<Elem>(x))];
      }
    }
    std::size_t const n   = members.size();
    auto const&       sig = a->signature();

    std::vector<std::vector<Elem>> tables(sig.size());
    std::vector<Elem>              args;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      unsigned k    = sig[op].arity;
      auto     rows = *table_rows(n, k);
      tables[op].resize(rows);
      args.resize(k);
      for (std::size_t row = 0; row < rows; ++row) {
        std::size_t r = row;
        for (unsigned i = k; i-- > 0;) {
          args[i] = members[r % n];
          r /= n;
        }
        tables[op][row] = block_of[a->apply(op, args)];
      }
    }
    auto q = std::make_shared<FiniteAlgebra const>(
        a->name() + "/" + theta.to_string(), n, sig, std::move(tables));
    return Quotient{q, Homomorphism(a, q, std::move(block_of))};
  }

}  // namespace abelia
