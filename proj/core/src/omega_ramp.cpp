#include "bornolab/omega_ramp.hpp"

#include <algorithm>

namespace bornolab {

namespace {

constexpr std::size_t kMaxWindow = 1u << 20;

Elem clamp_nat(std::int64_t v) {
  if (v < 0) return 0;
  if (v >= static_cast<std::int64_t>(kOmega)) return kOmega - 1;
  return static_cast<Elem>(v);
}

} // namespace

OmegaRamp::OmegaRamp(LatticePtr dst, std::vector<Elem> head, RampTail tail)
    : dst_(std::move(dst)), head_(std::move(head)), tail_(tail) {
  omega_v_ = sup_finite();
  normalize();
  validate();
}

OmegaRamp::OmegaRamp(LatticePtr dst, std::vector<Elem> head, RampTail tail, Elem omega_value)
    : dst_(std::move(dst)), head_(std::move(head)), tail_(tail), omega_v_(omega_value) {
  normalize();
  validate();
}

OmegaRamp OmegaRamp::constant(LatticePtr dst, Elem c) {
  return OmegaRamp(std::move(dst), {}, RampTail::constant(c));
}

OmegaRamp OmegaRamp::identity(LatticePtr omega_chain) {
  return OmegaRamp(std::move(omega_chain), {}, RampTail::shifted(0), kOmega);
}

Elem OmegaRamp::tail_at(std::size_t n) const {
  if (tail_.kind == RampTail::Kind::Const) return tail_.value;
  return clamp_nat(static_cast<std::int64_t>(n) + tail_.shift);
}

Elem OmegaRamp::eval(Elem n) const {
  if (n == kOmega) return omega_v_;
  if (n < head_.size()) return head_[n];
  return tail_at(n);
}

Elem OmegaRamp::sup_finite() const {
  if (tail_.kind == RampTail::Kind::Shift) return kOmega;
  Elem acc = tail_.value;
  for (Elem v : head_) acc = dst_->join(acc, v); // monotone heads make this the tail value
  return acc;
}

bool OmegaRamp::hits_omega_at_finite() const {
  if (tail_.kind == RampTail::Kind::Const && tail_.value == kOmega) return true;
  return std::find(head_.begin(), head_.end(), kOmega) != head_.end();
}

void OmegaRamp::normalize() {
  while (!head_.empty()) {
    std::size_t i = head_.size() - 1;
    if (tail_.kind == RampTail::Kind::Shift &&
        static_cast<std::int64_t>(i) + tail_.shift < 0)
      break;
    if (head_[i] != tail_at(i)) break;
    head_.pop_back();
  }
}

void OmegaRamp::validate() const {
  if (head_.size() > kMaxWindow) fail(Errc::TooLarge, "ramp head too long");
  for (Elem v : head_)
    if (!dst_->is_valid_elem(v)) fail(Errc::BasisMismatch, "head value outside codomain");
  if (tail_.kind == RampTail::Kind::Const && !dst_->is_valid_elem(tail_.value))
    fail(Errc::BasisMismatch, "tail value outside codomain");
  if (!dst_->is_valid_elem(omega_v_))
    fail(Errc::BasisMismatch, "omega value outside codomain");
  if (tail_.kind == RampTail::Kind::Shift) {
    if (dst_->is_finite())
      fail(Errc::NotMonotone, "shift tail into a finite lattice");
    if (static_cast<std::int64_t>(head_.size()) + tail_.shift < 0)
      fail(Errc::NotMonotone, "shift tail dips below zero");
    if (omega_v_ != kOmega)
      fail(Errc::NotMonotone, "unbounded ramp must send omega to omega");
  }
  for (std::size_t i = 0; i + 1 < head_.size(); ++i)
    if (!dst_->leq(head_[i], head_[i + 1]))
      fail(Errc::NotMonotone, "head values decrease at " + std::to_string(i));
  if (!head_.empty() && !dst_->leq(head_.back(), tail_at(head_.size())))
    fail(Errc::NotMonotone, "head exceeds tail");
  if (tail_.kind == RampTail::Kind::Const && !dst_->leq(tail_.value, omega_v_))
    fail(Errc::NotMonotone, "omega value below a finite value");
  for (Elem v : head_)
    if (!dst_->leq(v, omega_v_))
      fail(Errc::NotMonotone, "omega value below a head value");
}

OmegaRamp OmegaRamp::mapped(const std::vector<Elem>& table, LatticePtr new_dst) const {
  if (!dst_->is_finite()) fail(Errc::BasisMismatch, "table composition over omega source");
  std::vector<Elem> head(head_.size());
  for (std::size_t i = 0; i < head_.size(); ++i) head[i] = table.at(head_[i]);
  RampTail tail = RampTail::constant(table.at(tail_.value));
  return OmegaRamp(std::move(new_dst), std::move(head), tail, table.at(omega_v_));
}

OmegaRamp OmegaRamp::mapped(const OmegaRamp& g) const {
  if (dst_->is_finite()) fail(Errc::BasisMismatch, "omega composition over finite source");
  std::size_t window = head_.size();
  RampTail tail;
  if (tail_.kind == RampTail::Kind::Const) {
    tail = RampTail::constant(g.eval(tail_.value));
  } else {
    // past the window the inner value n + shift runs beyond g's head
    std::int64_t inner_past = static_cast<std::int64_t>(g.head().size()) - tail_.shift;
    window = std::max<std::int64_t>(window, std::max<std::int64_t>(inner_past, 0));
    if (window > kMaxWindow) fail(Errc::TooLarge, "composition window");
    if (g.tail().kind == RampTail::Kind::Const)
      tail = RampTail::constant(g.tail().value);
    else
      tail = RampTail::shifted(tail_.shift + g.tail().shift);
  }
  std::vector<Elem> head(window);
  for (std::size_t n = 0; n < window; ++n) head[n] = g.eval(eval(static_cast<Elem>(n)));
  return OmegaRamp(g.dst(), std::move(head), tail, g.eval(omega_v_));
}

namespace {

struct Planned {
  std::size_t window;
  RampTail tail;
};

Planned plan_lub(const OmegaRamp& a, const OmegaRamp& b, bool join, const Lattice& dst) {
  const RampTail& ta = a.tail();
  const RampTail& tb = b.tail();
  std::size_t window = std::max(a.head().size(), b.head().size());
  auto mix = [&](Elem x, Elem y) { return join ? dst.join(x, y) : dst.meet(x, y); };

  if (ta.kind == RampTail::Kind::Const && tb.kind == RampTail::Kind::Const)
    return {window, RampTail::constant(mix(ta.value, tb.value))};

  if (ta.kind == RampTail::Kind::Shift && tb.kind == RampTail::Kind::Shift)
    return {window, RampTail::shifted(join ? std::max(ta.shift, tb.shift)
                                           : std::min(ta.shift, tb.shift))};

  const RampTail& c = ta.kind == RampTail::Kind::Const ? ta : tb;   // constant side
  const RampTail& s = ta.kind == RampTail::Kind::Shift ? ta : tb;   // shifted side
  if (c.value == kOmega)
    return {window, join ? RampTail::constant(kOmega) : RampTail::shifted(s.shift)};
  // crossing point: n + shift reaches the constant at n = value - shift
  std::int64_t cross = static_cast<std::int64_t>(c.value) - s.shift + 1;
  window = std::max<std::int64_t>(window, std::max<std::int64_t>(cross, 0));
  return {window, join ? RampTail::shifted(s.shift) : RampTail::constant(c.value)};
}

} // namespace

OmegaRamp OmegaRamp::join(const OmegaRamp& other) const {
  Planned p = plan_lub(*this, other, true, *dst_);
  if (p.window > kMaxWindow) fail(Errc::TooLarge, "join window");
  std::vector<Elem> head(p.window);
  for (std::size_t n = 0; n < p.window; ++n)
    head[n] = dst_->join(eval(static_cast<Elem>(n)), other.eval(static_cast<Elem>(n)));
  return OmegaRamp(dst_, std::move(head), p.tail, dst_->join(omega_v_, other.omega_v_));
}

OmegaRamp OmegaRamp::meet(const OmegaRamp& other) const {
  Planned p = plan_lub(*this, other, false, *dst_);
  if (p.window > kMaxWindow) fail(Errc::TooLarge, "meet window");
  std::vector<Elem> head(p.window);
  for (std::size_t n = 0; n < p.window; ++n)
    head[n] = dst_->meet(eval(static_cast<Elem>(n)), other.eval(static_cast<Elem>(n)));
  return OmegaRamp(dst_, std::move(head), p.tail, dst_->meet(omega_v_, other.omega_v_));
}

OmegaRamp OmegaRamp::adjoint_into_omega(LatticePtr src_chain) const {
  if (dst_->is_finite()) fail(Errc::BasisMismatch, "adjoint_into_omega needs omega codomain");
  if (!sup_continuous())
    fail(Errc::NotJoinPreserving, "value at omega exceeds the sup of finite values");

  // prefix of finite-valued head entries; monotone, so omega values trail
  std::size_t hfin = 0;
  while (hfin < head_.size() && head_[hfin] != kOmega) ++hfin;
  Elem head_prefix_sup = hfin == 0 ? 0 : static_cast<Elem>(hfin - 1);

  std::size_t window = 0;
  RampTail tail;
  if (tail_.kind == RampTail::Kind::Shift) {
    window = head_.size() + static_cast<std::size_t>(std::max<std::int64_t>(tail_.shift, 0)) + 2;
    tail = RampTail::shifted(-tail_.shift);
  } else if (tail_.value == kOmega) {
    window = 2;
    for (Elem v : head_)
      if (v != kOmega) window = std::max<std::size_t>(window, static_cast<std::size_t>(v) + 2);
    tail = RampTail::constant(head_prefix_sup);
  } else {
    window = static_cast<std::size_t>(tail_.value) + 1;
    tail = RampTail::constant(kOmega);
  }
  if (window > kMaxWindow) fail(Errc::TooLarge, "adjoint window");

  auto best_below = [&](Elem b) -> Elem {
    if (eval(kOmega) <= b) return kOmega;
    if (sup_finite() <= b) return kOmega; // all naturals qualify, sup is omega
    Elem best = 0;
    bool any = false;
    for (std::size_t i = 0; i < head_.size(); ++i)
      if (head_[i] <= b) { best = static_cast<Elem>(i); any = true; }
    if (tail_.kind == RampTail::Kind::Shift) {
      std::int64_t n = static_cast<std::int64_t>(b) - tail_.shift;
      if (n >= static_cast<std::int64_t>(head_.size()) && n >= 0) {
        // the shifted tail may sit below b even when the zero-clamped part does not
        Elem cand = clamp_nat(n);
        if (eval(cand) <= b) { best = std::max(best, cand); any = true; }
      }
    } else if (tail_.value <= b) {
      return kOmega;
    }
    return any ? best : 0;
  };

  std::vector<Elem> head(window);
  for (std::size_t b = 0; b < window; ++b) head[b] = best_below(static_cast<Elem>(b));
  return OmegaRamp(std::move(src_chain), std::move(head), tail, kOmega);
}

} // namespace bornolab
