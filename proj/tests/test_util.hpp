#pragma once

#include <filesystem>

#include "hilie/characters.hpp"
#include "hilie/partition.hpp"

namespace hilie_test {

// Keep test runs hermetic: character-table caches go to a shared temp
// directory instead of the user's cache.
struct CacheDirGuard {
    CacheDirGuard() {
        hilie::set_cache_directory(std::filesystem::temp_directory_path() / "hilie-test-cache");
    }
};
inline CacheDirGuard g_cache_guard;

inline hilie::Partition P(std::vector<int> parts) { return hilie::Partition(std::move(parts)); }

} // namespace hilie_test
