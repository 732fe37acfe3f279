#include <sstream>

#include "opineq/ineq.hpp"

namespace opineq {

const std::vector<CatalogEntry>& check_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"agm", "agm", "||AB*||_p <= 1/2 ||A*A + B*B||_p"},
      {"sum-product-a", "sum-product",
       "||AXB + BYA||_p <= 1/2 ||T1 (+) T2||_p + 1/2 ||C (+) C||_p, T1 = A*A + XBB*X*, T2 = B*B + YAA*Y*, "
       "C = A*B + XBA*Y*"},
      {"sum-product-b", "sum-product",
       "||AXB + BYA||_p <= 1/2 ||T1 (+) T2||_p + 1/2 ||C (+) C||_p, T1 = X*A*AX + BB*, T2 = YAA*Y* + B*B, "
       "C = X*A*B + BA*Y*"},
      {"comm-block", "commutator",
       "||AB +- BA||_p <= 1/2 ||(A*A + BB*) (+) (AA* + B*B)||_p + 1/2 ||D (+) D||_p, D = A*B +- BA*"},
      {"comm-schatten", "commutator",
       "||AB +- BA||_p <= 1/2 (||A*A + BB*||_p^p + ||AA* + B*B||_p^p)^{1/p} + 2^{(1-p)/p} ||A*B +- BA*||_p"},
      {"comm-op-max", "commutator",
       "||AB +- BA|| <= 1/2 max(||A*A + BB*||, ||AA* + B*B||) + 1/2 ||A*B +- BA*||"},
      {"comm-normprod", "commutator", "||AB +- BA|| <= ||A|| ||B|| + 1/2 ||A*B +- BA*||"},
      {"comm-scaled", "commutator",
       "||AB +- BA|| <= 1/2 max(||u A*A + v BB*||, ||u AA* + v B*B||) + 1/2 ||A*B +- BA*||, u = ||B||/||A||, "
       "v = ||A||/||B||"},
      {"comm-scaled-order", "commutator", "scaled right side of comm-scaled <= right side of comm-normprod"},
      {"square-a2", "square", "||A^2||_p <= 1/2 ||(A*A + AA*) (+) (A*A + AA*)||_p"},
      {"square-sum", "square", "||A*A + AA*||_p <= ||A*A (+) AA*||_p + ||A^2 (+) A^2||_p"},
      {"square-diff", "square", "||A*A - AA*||_p <= ||A*A (+) AA*||_p"},
      {"square-op-lower", "square", "2 ||A^2|| <= ||A*A + AA*||"},
      {"square-op-upper", "square", "||A*A + AA*|| <= ||A^2|| + ||A||^2"},
      {"square-op-diff", "square", "||A*A - AA*|| <= ||A||^2"},
      {"square-chain-1", "square", "||A^2||_p <= 2^{(1-p)/p} ||A*A + AA*||_p"},
      {"square-chain-2", "square", "2^{(1-p)/p} ||A*A + AA*||_p <= 2^{1/p} ||A||_{2p}^2"},
      {"square-schatten-sum", "square", "||A*A + AA*||_p <= 2^{1/p} (||A||_{2p}^2 + ||A^2||_p)"},
      {"square-schatten-diff", "square", "||A*A - AA*||_p <= 2^{1/p} ||A||_{2p}^2"},
      {"mp-block-1", "moore-penrose", "||A||_p <= 1/2 ||R (+) R||_p, R = A*A + A'A, A' the pseudoinverse"},
      {"mp-block-2", "moore-penrose",
       "||A||_p <= 1/4 ||L (+) R||_p + 1/2 ||A (+) A||_p, L = AA* + AA', R = A*A + A'A"},
      {"mp-right", "moore-penrose", "||A||_p <= 1/2 ||A*A + A'A||_p"},
      {"mp-left", "moore-penrose", "||A||_p <= 1/2 ||AA* + AA'||_p"},
      {"mp-min-projector", "moore-penrose",
       "||A||_p <= 1/2 min(||A*A + P_range(A*)||_p, ||AA* + P_range(A)||_p)"},
      {"psplit-general", "positive-split",
       "||X + Y||_p <= 1/2 ||X^{2t} (+) Y^{2a}||_p + 1/2 ||X^{2(1-t)} (+) Y^{2(1-a)}||_p + 1/2 ||C (+) C||_p, "
       "C = X^t Y^a + X^{1-t} Y^{1-a}"},
      {"psplit-half", "positive-split", "||X + Y||_p <= ||X (+) Y||_p + ||X^{1/2} Y^{1/2} (+) X^{1/2} Y^{1/2}||_p"},
      {"wp-two-term", "weighted-product",
       "||AXB + BYA||_p <= 1/2 ||Re(X(A*A + BB*)) (+) Re(Y(B*B + AA*))||_p + 1/2 ||K (+) K||_p, "
       "K = X^{1/2}(A*B + BA*)Y^{1/2}"},
      {"wp-y0", "weighted-product", "||AXB||_p <= 1/2 ||Re(X(A*A + BB*))||_p"},
      {"wp-w-mediated", "weighted-product", "||AXB|| <= 1/2 w(X(A*A + BB*))"},
      {"wp-w-product", "weighted-product", "||AXB||^2 <= w(XA*A) w(XBB*)"},
      {"wp-sqrt-w", "weighted-product", "||P^{1/2} X^{1/2}|| <= w(PX)^{1/2}, P = |A|"},
      {"wp-two-sided", "weighted-product", "||P^{1/2} X Q^{1/2}|| <= w(PX)^{1/2} w(XQ)^{1/2}, P = |A|, Q = |B|"},
      {"wp-half-w", "weighted-product", "||P^{1/2} X Q^{1/2}|| <= 1/2 w(XP + XQ), P = |A|, Q = |B|"},
      {"selfadjoint-lemma", "selfadjoint-lemma", "AB selfadjoint implies ||AB||_p <= ||Re(BA)||_p"},
      {"rank-general", "rank-schatten", "||A||_{2r} <= k^{1/(2q)} ||A||_{2p}, 1/r = 1/p + 1/q, k = rank A"},
      {"rank-pp", "rank-schatten", "||A||_p <= k^{1/(2p)} ||A||_{2p}"},
      {"rank-general-2", "rank-schatten", "||A||_{2pr} <= k^{1/(2pq)} ||A||_{2p^2}"},
      {"rank-pp0", "rank-schatten", "||A||_{2p} <= k^{(p-1)/(2p^2)} ||A||_{2p^2}"},
      {"rank-chain", "rank-schatten", "k^{1/(2p)} ||A||_{2p} <= k^{(2p-1)/(2p^2)} ||A||_{2p^2}"},
      {"on-general", "orthonormal-sums",
       "sum |<Ax_n, x_n>|^{2r} <= 1/2 ||F||_{2p}^{2r} ||G||_{2q}^{2r} + 1/2 ||F^2 G^2||_r^r, F = |A|^a, "
       "G = |A*|^{1-a}"},
      {"on-pq", "orthonormal-sums",
       "sum |<Ax_n, x_n>|^p <= 1/2 ||F||_{2p}^p ||G||_{2p}^p + 1/2 ||F^2 G^2||_{p/2}^{p/2}"},
      {"on-half", "orthonormal-sums", "sum |<Ax_n, x_n>|^p <= 1/2 ||A||_p^p + 1/2 ||A^2||_{p/2}^{p/2}"},
      {"on-half-root", "orthonormal-sums",
       "(sum |<Ax_n, x_n>|^p)^{1/p} <= 2^{-1/p} (||A||_p + ||A^2||_{p/2}^{1/2})"},
      {"on-pair-rank", "orthonormal-sums", "sum |<Ax_n, y_n>|^{2r} <= k^{r/q} ||A||_{2p}^{2r}"},
      {"on-pair-rank-pp", "orthonormal-sums", "sum |<Ax_n, y_n>|^p <= k^{1/2} ||A||_{2p}^p"},
      {"weyl-refined", "weyl", "sum |l_n|^p <= 1/2 ||A||_p^p + 1/2 ||A^2||_{p/2}^{p/2}"},
      {"weyl-refined-link", "weyl", "1/2 ||A||_p^p + 1/2 ||A^2||_{p/2}^{p/2} <= ||A||_p^p"},
      {"weyl-square-power", "weyl", "||A^2||_{p/2}^{p/2} <= ||A||_p^p"},
      {"weyl-classic", "weyl", "sum |l_n|^p <= ||A||_p^p"},
      {"weyl-power-pair", "weyl", "sum |l_n|^p <= 1/2 || |A|^{2a} ||_p^p + 1/2 || |A*|^{2(1-a)} ||_p^p"},
      {"weyl-rank", "weyl", "sum |l_n|^p <= k^{1/2} ||A||_{2p}^p"},
      {"mono-decreasing", "monotone", "||A||_q <= ||A||_p for p < q"},
      {"mono-reverse", "monotone", "||A||_p <= n^{(q-p)/(pq)} ||A||_q, n = min(rows, cols)"},
      {"mono-normalized", "monotone", "n^{-1/p} ||A||_p <= n^{-1/q} ||A||_q for consecutive grid orders p < q"},
      {"pn-w-mediated", "positive-norm",
       "||X + Y|| <= max(||X||, ||Y||) + w([[0, X^{1-t} Y^{1-a}], [Y^a X^t, 0]])"},
      {"pn-closed-form", "positive-norm",
       "||X + Y|| <= (||X|| + ||Y|| + sqrt((||X|| - ||Y||)^2 + 4 ||X^{1-t} Y^{1-a}|| ||Y^a X^t||)) / 2"},
      {"pn-half", "positive-norm",
       "||X + Y|| <= (||X|| + ||Y|| + sqrt((||X|| - ||Y||)^2 + 4 ||X^{1/2} Y^{1/2}||^2)) / 2"},
      {"pn-half-vs-max", "positive-norm", "right side of pn-half <= max(||X||, ||Y||) + ||X^{1/2} Y^{1/2}||"},
      {"block-radius", "block-radius", "r([[A, X], [B, Y]]) <= r([[||A||, ||X||], [||B||, ||Y||]])"},
      {"nr-general", "numrad",
       "w(A) <= 1/2 ||A|| + 1/2 r^{1/4}(|A|^{2t} |A*|^{2a}) r^{1/4}(|A|^{2(1-t)} |A*|^{2(1-a)})"},
      {"nr-general-vs-norm", "numrad", "right side of nr-general <= ||A||"},
      {"nr-pintu", "numrad", "w(A) <= 1/2 ||A|| + 1/2 r^{1/2}(|A| |A*|)"},
      {"nr-kit3", "numrad", "w(A) <= 1/2 ||A|| + 1/2 ||A^2||^{1/2}"},
      {"nr-abs-sum", "numrad", "w(A) <= 1/2 || |A| + |A*| ||"},
      {"sw-lower", "sandwich", "1/2 ||A|| <= max(1/2 ||A||, r(A))"},
      {"sw-mid", "sandwich", "max(1/2 ||A||, r(A)) <= w(A)"},
      {"sw-upper", "sandwich", "w(A) <= ||A||"},
      {"sw-normal-r", "sandwich", "A normal implies w(A) = r(A)"},
      {"sw-normal-norm", "sandwich", "A normal implies w(A) = ||A||"},
      {"tri-astar-b", "triangle", "||A +- B|| <= sqrt(||A*A + B*B|| + 2 w(A*B))"},
      {"tri-a-bstar", "triangle", "||A +- B|| <= sqrt(||AA* + BB*|| + 2 w(AB*))"},
      {"tri-chain-1", "triangle",
       "sqrt(||A*A + B*B|| + 2 w(A*B)) <= sqrt(||A||^2 + ||B||^2 + 2 ||A*B||), and the AA*, AB* twin"},
      {"tri-chain-2", "triangle", "sqrt(||A||^2 + ||B||^2 + 2 ||A*B||) <= ||A|| + ||B||, and the AB* twin"},
      {"tri-min", "triangle",
       "min of the tri-astar-b and tri-a-bstar bounds <= sqrt(||A||^2 + ||B||^2 + ||A|| ||B|| + "
       "min(w(A*B), w(AB*)))"},
      {"tri-normeq", "triangle", "Re(A) Im(A) = 0 implies ||A|| = sqrt(1/2 ||A*A + AA*||)"},
      {"par-iff-wAstarB", "parallelism", "A parallel to B iff w(A*B) = ||A|| ||B||"},
      {"par-iff-wABstar", "parallelism", "A parallel to B iff w(AB*) = ||A|| ||B||"},
      {"par-necessary-1", "parallelism", "A parallel to B implies ||A*A + B*B|| = ||A||^2 + ||B||^2"},
      {"par-necessary-2", "parallelism", "A parallel to B implies ||AA* + BB*|| = ||A||^2 + ||B||^2"},
      {"mixed-schwarz", "mixed-schwarz", "|<Ax, y>|^2 <= <|A|^{2a} x, x> <|A*|^{2(1-a)} y, y>"},
      {"mccarthy", "mccarthy", "<Px, x>^p <= <P^p x, x> for P >= 0, ||x|| = 1, p >= 1"},
      {"buzano", "buzano", "|<x, e> <e, y>| <= 1/2 (||x|| ||y|| + |<x, y>|) for ||e|| = 1"},
  };
  return entries;
}

std::string catalog_markdown() {
  std::ostringstream os;
  os << "# Check catalog\n\n"
     << "Generated by `opineq checks`. `(+)` is the direct sum, `w` the numerical radius, `r` the spectral "
        "radius, `a` the power-pair exponent alpha, `k` the rank.\n\n"
     << "| check_id | family | inequality |\n|---|---|---|\n";
  for (const CatalogEntry& e : check_catalog()) {
    std::string stmt;
    for (char c : e.statement) {
      if (c == '|') stmt += '\\';
      stmt += c;
    }
    os << "| `" << e.check_id << "` | " << e.family << " | `" << stmt << "` |\n";
  }
  return os.str();
}

}  // namespace opineq
