#pragma once

// Single include point for nlohmann::json so translation units stay in sync.
#include <json.hpp>
