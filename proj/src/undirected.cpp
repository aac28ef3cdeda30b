#include "lamnet/undirected.h"

namespace lamnet {

namespace {

InteractionRule annihilation(const Symbol* s) {
    if (s->arity == 0) return {s, s, {}, {}};
    return {s,
            s,
            {TmplTerm::v("x1"), TmplTerm::v("x2")},
            {TmplTerm::v("x1"), TmplTerm::v("x2")}};
}

// alpha[inner(x1,y1), inner(x2,y2)] >< beta[outer(x1,x2), outer(y1,y2)]
InteractionRule commutation(const Symbol* alpha, const Symbol* inner,
                            const Symbol* beta, const Symbol* outer) {
    return {alpha,
            beta,
            {TmplTerm::ag(inner, {TmplTerm::v("x1"), TmplTerm::v("y1")}),
             TmplTerm::ag(inner, {TmplTerm::v("x2"), TmplTerm::v("y2")})},
            {TmplTerm::ag(outer, {TmplTerm::v("x1"), TmplTerm::v("x2")}),
             TmplTerm::ag(outer, {TmplTerm::v("y1"), TmplTerm::v("y2")})}};
}

InteractionRule erasure(const Symbol* s) {
    return {s, sym::eps, {TmplTerm::ag(sym::eps), TmplTerm::ag(sym::eps)}, {}};
}

}  // namespace

UndirectedSystem buildSystem(PsiDeltaVariant variant) {
    UndirectedSystem sys;
    sys.variant = variant;
    sys.table.ordered = false;

    sys.table.add(annihilation(sym::lam));
    sys.table.add(annihilation(sym::psi));
    sys.table.add(annihilation(sym::del));
    sys.table.add(annihilation(sym::eps));

    sys.table.add(commutation(sym::lam, sym::del, sym::psi, sym::lam));
    sys.table.add(commutation(sym::lam, sym::del, sym::del, sym::lam));
    if (variant == PsiDeltaVariant::Standard)
        sys.table.add(commutation(sym::psi, sym::del, sym::del, sym::psi));
    else
        sys.table.add(commutation(sym::del, sym::del, sym::psi, sym::del));

    sys.table.add(erasure(sym::lam));
    sys.table.add(erasure(sym::psi));
    sys.table.add(erasure(sym::del));
    return sys;
}

Configuration encode(const TermPtr& m, NameSupply& fresh) {
    return encodeCore(m, fresh, GammaSpec{sym::lam, sym::lam, sym::psi, true});
}

const ReadbackTables& undirectedReadbackTables() {
    static const ReadbackTables tables = [] {
        ReadbackTables t;
        t.roles[sym::lam] = {Role::Abs, Role::BVar, Role::App};
        t.roles[sym::psi] = {Role::Fan, Role::Pass, Role::Pass};
        t.roles[sym::del] = {Role::Fan, Role::Pass, Role::Pass};
        t.roles[sym::eps] = {Role::Residual, Role::Bad, Role::Bad};
        t.fanFamily[sym::psi] = sym::psi;
        t.fanFamily[sym::del] = sym::del;
        return t;
    }();
    return tables;
}

TermPtr readback(const Configuration& c) {
    return readbackWithTables(c, undirectedReadbackTables());
}

}  // namespace lamnet
