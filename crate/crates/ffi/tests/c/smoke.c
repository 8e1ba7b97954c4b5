#include <stdio.h>
#include <string.h>

#include "symvar.h"

#define CHECK(cond)                                            \
    do {                                                       \
        if (!(cond)) {                                         \
            fprintf(stderr, "check failed: %s\n", #cond);      \
            return 1;                                          \
        }                                                      \
    } while (0)

int main(void) {
    uint64_t count = 0;
    CHECK(symvar_rook_count(3, &count) == SYMVAR_STATUS_OK && count == 34);

    SymvarRootSystem *rs = NULL;
    CHECK(symvar_root_system_new("A", 3, &rs) == SYMVAR_STATUS_OK);
    int64_t lambda[3] = {1, 0, 1};
    size_t orbit = 0;
    CHECK(symvar_weyl_orbit_size(rs, lambda, 3, &orbit) == SYMVAR_STATUS_OK && orbit == 12);
    symvar_root_system_free(rs);

    CHECK(symvar_root_system_new("E", 6, &rs) == SYMVAR_STATUS_INVALID_INPUT && rs == NULL);
    CHECK(symvar_last_error() != NULL && strlen(symvar_last_error()) > 0);

    SymvarInvolution *inv = NULL;
    size_t params[1] = {2};
    CHECK(symvar_involution_new("AII", params, 1, &inv) == SYMVAR_STATUS_OK);
    int64_t w2[3] = {0, 1, 0};
    bool special = false;
    CHECK(symvar_involution_is_special(inv, w2, 3, &special) == SYMVAR_STATUS_OK && special);
    symvar_involution_free(inv);

    SymvarCensus census;
    CHECK(symvar_census("skew", 3, 3, &census) == SYMVAR_STATUS_OK);
    CHECK(census.orbit_count == 4 && census.matches);

    int64_t m[4] = {1, 1, 1, 1};
    uint8_t u[4], t[4], v[4];
    size_t r[2];
    CHECK(symvar_bruhat_factor(m, 2, 3, u, t, r, v) == SYMVAR_STATUS_OK);
    CHECK((r[0] != 0) + (r[1] != 0) == 1);

    printf("ok %s\n", symvar_version());
    return 0;
}
