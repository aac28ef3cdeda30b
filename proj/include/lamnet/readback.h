#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "lamnet/lambda.h"
#include "lamnet/net.h"

namespace lamnet {

// What entering an agent through a given port means for decoding. One table
// per encoding flavor; the traversal itself is flavor-agnostic.
enum class Role {
    Abs,       // principal of the abstraction agent
    BVar,      // binder port (aux1) of the abstraction agent
    App,       // result port (aux2) of the application agent
    Fan,       // principal of a sharing agent: exit of a matched split
    Pass,      // aux of a sharing agent: entry of a split, pass to principal
    Residual,  // eps
    Bad,       // entry that cannot occur in a decodable normal form
};

struct ReadbackTables {
    // (symbol, port 0..2) -> role; port 0 is the principal.
    std::map<const Symbol*, std::array<Role, 3>> roles;
    // Sharing agents grouped into duplication families; a split entered at
    // aux i must be exited at a same-family principal, branch i.
    std::map<const Symbol*, const Symbol*> fanFamily;
};

struct ReadbackError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResidualSharing : ReadbackError {
    std::string port;
    explicit ResidualSharing(const std::string& p)
        : ReadbackError("residual sharing at " + p), port(p) {}
};
struct NotNormal : ReadbackError {
    std::string pair;
    explicit NotNormal(const std::string& p)
        : ReadbackError("configuration not in normal form: " + p), pair(p) {}
};
struct UnboundOccurrence : ReadbackError {
    std::string name;
    explicit UnboundOccurrence(const std::string& n)
        : ReadbackError("binder port reached before its abstraction: " + n),
          name(n) {}
};

// Decode the normal-form configuration reachable from interface entry 0.
// Fresh binders are minted v0, v1, ... in traversal order.
TermPtr readbackWithTables(const Configuration& c, const ReadbackTables& tables);

}  // namespace lamnet
