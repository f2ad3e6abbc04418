#include "topolab/phi12.hpp"

#include <algorithm>

namespace topolab {

OpPair::OpPair(Operation phi1, Operation phi2) : phi1_(std::move(phi1)), phi2_(std::move(phi2)) {
  if (!(phi1_.topology() == phi2_.topology())) throw UsageError("operation pair spans two different spaces");
  phi1_open_ = phi_open_family(phi1_);

  // interior(A) = ∪{U ∈ φ1O : φ2(U) ⊂ A}: scatter each U to its image, then
  // take the subset-union transform.
  const int n = topology().size();
  interior_.assign(topology().ground().subset_count(), Subset{});
  for (Subset u : phi1_open_) interior_[phi2_(u).bits()] |= u;
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t m = 0; m < interior_.size(); ++m) {
      if (m & bit) interior_[m] |= interior_[m ^ bit];
    }
  }
}

OpPair OpPair::of(const Topology& t, OperationName first, OperationName second) {
  return OpPair(builtin(t, first), builtin(t, second));
}

Subset phi12_cl_pointwise(const OpPair& p, Subset a) {
  Subset out;
  const int n = p.topology().size();
  for (int x = 0; x < n; ++x) {
    bool all_meet = true;
    for (Subset u : p.phi1_open()) {
      if (u.contains(x) && !p.phi2()(u).intersects(a)) {
        all_meet = false;
        break;
      }
    }
    if (all_meet) out |= Subset::singleton(x);
  }
  return out;
}

Family phi12_open_family(const OpPair& p) {
  std::vector<Subset> out;
  const auto table = p.interior_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Subset a(static_cast<Mask>(i));
    if (a.subset_of(table[i])) out.push_back(a);
  }
  return Family(std::move(out));
}

Family phi12_closed_family(const OpPair& p) { return phi12_open_family(p).complements(p.universe()); }

KuratowskiFlags check_kuratowski(std::span<const Subset> table, Subset universe) {
  KuratowskiFlags k;
  k.preserves_empty = table[0].empty();
  k.extensive = true;
  k.idempotent = true;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Subset a(static_cast<Mask>(i));
    if (!a.subset_of(table[i])) k.extensive = false;
    if (table[table[i].bits()] != table[i]) k.idempotent = false;
  }
  k.additive = true;
  if (table.size() <= 256) {
    for (std::size_t i = 0; i < table.size() && k.additive; ++i) {
      for (std::size_t j = i + 1; j < table.size(); ++j) {
        if (table[i | j] != (table[i] | table[j])) {
          k.additive = false;
          break;
        }
      }
    }
  } else {
    // Finite additivity ⇔ every image is the union of its point images and
    // dominates the image of the empty set.
    for (std::size_t i = 1; i < table.size() && k.additive; ++i) {
      Subset joined;
      for_each_point(Subset(static_cast<Mask>(i)), [&](int x) { joined |= table[std::size_t{1} << x]; });
      if (joined != table[i] || !table[0].subset_of(table[i])) k.additive = false;
    }
  }
  (void)universe;
  return k;
}

Subset closure_in(const Family& opens, Subset a, Subset universe) {
  Subset outside;
  for (Subset u : opens) {
    if (!u.intersects(a)) outside |= u;
  }
  return universe - outside;
}

StructureReport classify_structure(const OpPair& p) {
  StructureReport r;
  const Subset x = p.universe();
  const Family open = phi12_open_family(p);
  r.is_supratopology = open.contains(Subset{}) && open.contains(x) && is_union_closed(open);
  r.is_topology = r.is_supratopology && is_intersection_closed(open);

  r.closed_iff_cl_subset = true;
  r.closed_iff_cl_equal = true;
  std::vector<Subset> cl(p.topology().ground().subset_count());
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const Subset k(static_cast<Mask>(i));
    cl[i] = p.closure(k);
    const bool closed = open.contains(x - k);
    if (closed != cl[i].subset_of(k)) r.closed_iff_cl_subset = false;
    if (closed != (cl[i] == k)) r.closed_iff_cl_equal = false;
  }
  r.kuratowski = check_kuratowski(cl, x);
  r.is_kuratowski = r.kuratowski.all();
  return r;
}

std::string_view to_string(NamedFamily name) {
  switch (name) {
    case NamedFamily::SO: return "SO";
    case NamedFamily::SC: return "SC";
    case NamedFamily::PO: return "PO";
    case NamedFamily::PC: return "PC";
    case NamedFamily::RO: return "RO";
    case NamedFamily::RC: return "RC";
    case NamedFamily::SR: return "SR";
    case NamedFamily::tau_theta: return "tau_theta";
    case NamedFamily::tau_s: return "tau_s";
    case NamedFamily::SthetaO: return "SthetaO";
    case NamedFamily::SthetaC: return "SthetaC";
    case NamedFamily::thetaSO: return "thetaSO";
    case NamedFamily::thetaSC: return "thetaSC";
  }
  return "?";
}

namespace {

// Interior/closure straight from the list of open sets.
struct OpenSetCalculus {
  const Family& opens;
  Subset universe;

  Subset interior(Subset a) const {
    Subset out;
    for (Subset u : opens) {
      if (u.subset_of(a)) out |= u;
    }
    return out;
  }
  Subset closure(Subset a) const { return closure_in(opens, a, universe); }
};

template <class Pred>
Family collect(Subset universe, Pred&& keep) {
  std::vector<Subset> out;
  for (Mask m = 0; m <= universe.bits(); ++m) {
    if (keep(Subset(m))) out.push_back(Subset(m));
  }
  return Family(std::move(out));
}

// Sets A such that every x ∈ A has some U ∈ local with x ∈ U and hull(U) ⊂ A.
template <class Hull>
Family pointwise_open(const Family& local, Subset universe, Hull&& hull) {
  std::vector<std::pair<Subset, Subset>> pairs;
  for (Subset u : local) pairs.emplace_back(u, hull(u));
  return collect(universe, [&](Subset a) {
    bool ok = true;
    for_each_point(a, [&](int x) {
      if (!ok) return;
      ok = std::any_of(pairs.begin(), pairs.end(),
                       [&](const auto& uh) { return uh.first.contains(x) && uh.second.subset_of(a); });
    });
    return ok;
  });
}

}  // namespace

Family named_family(const Topology& t, NamedFamily name) {
  const Subset x = t.universe();
  const OpenSetCalculus c{t.opens(), x};
  auto semi_open = [&] { return collect(x, [&](Subset a) { return a.subset_of(c.closure(c.interior(a))); }); };
  auto pre_open = [&] { return collect(x, [&](Subset a) { return a.subset_of(c.interior(c.closure(a))); }); };

  switch (name) {
    case NamedFamily::SO: return semi_open();
    case NamedFamily::SC: return semi_open().complements(x);
    case NamedFamily::PO: return pre_open();
    case NamedFamily::PC: return pre_open().complements(x);
    case NamedFamily::RO: return collect(x, [&](Subset a) { return a == c.interior(c.closure(a)); });
    case NamedFamily::RC: return collect(x, [&](Subset a) { return a == c.closure(c.interior(a)); });
    case NamedFamily::SR: {
      const Family so = semi_open();
      const Family sc = so.complements(x);
      return collect(x, [&](Subset a) { return so.contains(a) && sc.contains(a); });
    }
    case NamedFamily::tau_theta:
      return pointwise_open(t.opens(), x, [&](Subset u) { return c.closure(u); });
    case NamedFamily::tau_s:
      return build_topology(t.ground(), named_family(t, NamedFamily::RO)).opens();
    case NamedFamily::SthetaO:
    case NamedFamily::SthetaC: {
      const Family so = semi_open();
      const Family sc = so.complements(x);
      // Semi-closure as the smallest semi-closed superset.
      auto semi_closure = [&](Subset u) {
        Subset out = x;
        for (Subset k : sc) {
          if (u.subset_of(k)) out &= k;
        }
        return out;
      };
      Family f = pointwise_open(so, x, semi_closure);
      return name == NamedFamily::SthetaO ? f : f.complements(x);
    }
    case NamedFamily::thetaSO:
    case NamedFamily::thetaSC: {
      Family f = pointwise_open(semi_open(), x, [&](Subset u) { return c.closure(u); });
      return name == NamedFamily::thetaSO ? f : f.complements(x);
    }
  }
  return {};
}

Family enlargement_base(const OpPair& p) {
  std::vector<Subset> out;
  for (Subset u : p.phi1_open()) out.push_back(p.phi2()(u));
  return Family(std::move(out));
}

bool is_base_for(const Family& base, const Family& target) {
  for (Subset t : target) {
    Subset covered;
    for (Subset b : base) {
      if (b.subset_of(t)) covered |= b;
    }
    if (covered != t) return false;
  }
  return true;
}

BaseTheoremCheck check_base_theorem(const OpPair& p) {
  BaseTheoremCheck c;
  const Operation& f1 = p.phi1();
  const Operation& f2 = p.phi2();
  const Family open12 = phi12_open_family(p);
  const Family base = enlargement_base(p);

  c.images_stable = std::all_of(p.phi1_open().begin(), p.phi1_open().end(), [&](Subset u) {
    const Subset image = f2(u);
    return p.phi1_open().contains(image) && f2(image).subset_of(image);
  });
  c.phi1_open_in_phi2_open = p.phi1_open().subfamily_of(phi_open_family(f2));
  c.base_in_phi12_open = base.subfamily_of(open12);
  c.dominates = leq(f1, f2) || leq(builtin(p.topology(), OperationName::identity), f2);
  c.base_in_both_families = c.base_in_phi12_open && base.subfamily_of(p.phi1_open());
  c.is_base = is_base_for(base, open12);
  return c;
}

}  // namespace topolab
