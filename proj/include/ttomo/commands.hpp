#pragma once

#include <iosfwd>

#include "json.hpp"
#include "ttomo/config.hpp"
#include "ttomo/errors.hpp"
#include "ttomo/selfcheck.hpp"

namespace ttomo {

// Exit codes: 0 success, 1 condition failure, 2 I/O or config, 3 precondition.
int cmd_forward(const Config& c, std::ostream& log);
int cmd_check(const Config& c, std::ostream& log);
int cmd_reconstruct(const Config& c, std::ostream& log);
int cmd_dump_modes(const Config& c, std::ostream& log);
int cmd_selfcheck(const SelfcheckOptions& opt, std::ostream& log);

nlohmann::json error_json(const Error& e);

}  // namespace ttomo
