#include "topolab/filters.hpp"

#include <algorithm>

namespace topolab {

Filter::Filter(Subset core) : core_(core) {
  if (core.empty()) throw UsageError("a filter core must be nonempty");
}

Family Filter::members(Subset universe) const {
  std::vector<Subset> out;
  const Subset free = universe - core_;
  // Enumerate submasks of the free points.
  Mask m = free.bits();
  while (true) {
    out.push_back(core_ | Subset(m));
    if (m == 0) break;
    m = (m - 1) & free.bits();
  }
  return Family(std::move(out));
}

bool is_filterbase(const Family& f) {
  if (f.empty()) return false;
  for (Subset s : f) {
    if (s.empty()) return false;
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const Subset both = f[i] & f[j];
      if (std::none_of(f.begin(), f.end(), [&](Subset s) { return s.subset_of(both); })) return false;
    }
  }
  return true;
}

Filter generated_filter(const Family& base) {
  if (!is_filterbase(base)) throw PreconditionError("family is not a filterbase");
  // A finite directed family has a least member, which is its intersection.
  return Filter(base.meet(base[0] | base.join()));
}

namespace {

Family local_family(const OpPair& p, int a, LocalSystem local) {
  if (local == LocalSystem::phi1_open) return p.phi1_open().containing(a);
  return neighborhoods(p.phi1_open(), a, p.universe());
}

}  // namespace

bool converges(const Filter& f, const OpPair& p, int a) {
  for (Subset u : p.phi1_open()) {
    if (u.contains(a) && !f.core().subset_of(p.phi2()(u))) return false;
  }
  return true;
}

bool accumulates(const Filter& f, const OpPair& p, int a) { return p.closure(f.core()).contains(a); }

bool base_converges(const Family& base, const OpPair& p, int a, LocalSystem local) {
  for (Subset u : local_family(p, a, local)) {
    const Subset image = p.phi2()(u);
    if (std::none_of(base.begin(), base.end(), [&](Subset b) { return b.subset_of(image); })) return false;
  }
  return true;
}

bool base_accumulates(const Family& base, const OpPair& p, int a, LocalSystem local) {
  if (local == LocalSystem::phi1_open) {
    return std::all_of(base.begin(), base.end(), [&](Subset b) { return p.closure(b).contains(a); });
  }
  const Family around = local_family(p, a, local);
  return std::all_of(base.begin(), base.end(), [&](Subset b) {
    return std::all_of(around.begin(), around.end(), [&](Subset n) { return p.phi2()(n).intersects(b); });
  });
}

Subset limit_set(const Filter& f, const OpPair& p) {
  Subset out;
  for (int a = 0; a < p.topology().size(); ++a) {
    if (converges(f, p, a)) out |= Subset::singleton(a);
  }
  return out;
}

Subset adherence_set(const Filter& f, const OpPair& p) { return p.closure(f.core()); }

Filter finer_convergent(const Filter& f, const OpPair& p, int a) {
  if (!is_regular_wrt(p.phi2(), p.phi1_open())) {
    throw PreconditionError("finer_convergent needs phi2 regular w.r.t. the phi1-open sets");
  }
  if (!accumulates(f, p, a)) throw PreconditionError("filter does not accumulate at the given point");

  // Members F ⊋ core only add supersets to the base; list them while cheap.
  const Subset x = p.universe();
  const Family members = (x - f.core()).count() <= 8 ? f.members(x) : Family{f.core()};
  std::vector<Subset> base;
  for (Subset u : p.phi1_open().containing(a)) {
    for (Subset m : members) base.push_back(p.phi2()(u) & m);
  }
  const Family fb(std::move(base));
  if (!is_filterbase(fb)) throw Error("finer_convergent: constructed family is not a filterbase");
  const Filter out = generated_filter(fb);
  if (!out.finer_than(f) || !converges(out, p, a)) throw Error("finer_convergent: postcondition failed");
  return out;
}

std::vector<Filter> maximal_filters(const Topology& t) {
  std::vector<Filter> out;
  for (int x = 0; x < t.size(); ++x) out.emplace_back(Subset::singleton(x));
  return out;
}

bool is_t2(const OpPair& p) {
  const int n = p.topology().size();
  for (int x = 0; x < n; ++x) {
    const Family ux = p.phi1_open().containing(x);
    for (int y = x + 1; y < n; ++y) {
      const Family uy = p.phi1_open().containing(y);
      bool separated = false;
      for (Subset u : ux) {
        for (Subset v : uy) {
          if (!p.phi2()(u).intersects(p.phi2()(v))) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return false;
    }
  }
  return true;
}

Family nbhd_filterbase(const OpPair& p, int a, NbhdVariant variant) {
  const bool inclusion = p.phi1_open().subfamily_of(phi_open_family(p.phi2()));
  std::vector<Subset> members;
  if (variant == NbhdVariant::plain) {
    if (!inclusion || !is_intersection_closed(p.phi1_open())) {
      throw PreconditionError("plain neighbourhood base needs phi1O intersection-closed and phi1O in phi2O");
    }
    for (Subset u : p.phi1_open().containing(a)) members.push_back(u);
  } else {
    if (!inclusion || !is_regular_wrt(p.phi2(), p.phi1_open())) {
      throw PreconditionError("enlarged neighbourhood base needs phi2 regular and phi1O in phi2O");
    }
    for (Subset u : p.phi1_open().containing(a)) members.push_back(p.phi2()(u));
  }
  Family base(std::move(members));
  if (!is_filterbase(base) || !base_converges(base, p, a)) {
    throw Error("neighbourhood base fails to be a convergent filterbase");
  }
  return base;
}

Subset cl_star(const OpPair& p, Subset a, ClStarScan scan) {
  Subset out;
  auto absorb = [&](Subset core) { out |= limit_set(Filter(core), p); };
  if (scan == ClStarScan::singletons) {
    for_each_point(a, [&](int y) { absorb(Subset::singleton(y)); });
  } else {
    for (Mask m = a.bits(); m != 0; m = (m - 1) & a.bits()) absorb(Subset(m));
  }
  return out;
}

Filter convergent_filter_containing(const OpPair& p, Subset a_set, int a) {
  if (!is_regular_wrt(p.phi2(), p.phi1_open())) {
    throw PreconditionError("construction needs phi2 regular w.r.t. the phi1-open sets");
  }
  if (!p.closure(a_set).contains(a)) throw PreconditionError("point is not in the closure of the set");
  std::vector<Subset> base;
  for (Subset u : p.phi1_open().containing(a)) base.push_back(p.phi2()(u) & a_set);
  const Family fb(std::move(base));
  if (!is_filterbase(fb)) throw Error("constructed family is not a filterbase");
  const Filter out = generated_filter(fb);
  if (!out.contains(a_set) || !converges(out, p, a)) throw Error("constructed filter fails its postcondition");
  return out;
}

}  // namespace topolab
