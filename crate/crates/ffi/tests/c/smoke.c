#include <stdio.h>
#include <string.h>
#include "hyperlat.h"

int main(void) {
    HlLattice *a = NULL, *b = NULL;
    int64_t gram[4] = {0, 1, 1, 0};
    if (hl_lattice_from_expr("U+A1", &a) != HL_STATUS_OK) return 1;
    if (hl_lattice_from_gram(gram, 2, &b) != HL_STATUS_OK) return 2;
    size_t rank = 0;
    hl_lattice_rank(a, &rank);
    if (rank != 3) return 3;
    int64_t det = 0;
    hl_lattice_det(b, &det);
    if (det != -1) return 4;

    HlVinbergRun *run = NULL;
    if (hl_vinberg_run(a, NULL, 0, &run) != HL_STATUS_OK) return 5;
    bool fv = false;
    hl_vinberg_finite_volume(run, &fv);
    size_t count = 0;
    hl_vinberg_root_count(run, &count);
    printf("roots %zu finite %d\n", count, (int)fv);
    hl_vinberg_free(run);

    HlLattice *bad = NULL;
    if (hl_lattice_from_expr("Q7", &bad) != HL_STATUS_PARSE) return 6;
    if (hl_last_error() == NULL) return 7;

    hl_lattice_free(a);
    hl_lattice_free(b);
    return fv ? 0 : 8;
}
