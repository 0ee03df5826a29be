#include <stdio.h>
#include <string.h>

#include "bicover.h"

int main(void) {
    const int64_t lo[] = {0, 2, 5, 9};
    const int64_t hi[] = {3, 6, 7, 9};
    BcCover *cover = NULL;
    if (bc_cover_intervals(lo, hi, 4, &cover) != BC_STATUS_OK) return 1;

    uint32_t dist[4];
    if (bc_bfs(cover, 4, 0, dist) != BC_STATUS_OK) return 2;
    if (dist[0] != 0 || dist[1] != 1 || dist[2] != 2 || dist[3] != BC_UNREACHABLE) return 3;

    BcGraph *graph = NULL;
    if (bc_graph_parse("graph 2 1 0\n0 7\n", &graph) != BC_STATUS_PARSE) return 4;
    if (graph != NULL || strstr(bc_last_error(), "out of range") == NULL) return 5;

    char *text = NULL;
    if (bc_cover_to_text(cover, &text) != BC_STATUS_OK) return 6;
    printf("%s", text);
    bc_string_free(text);
    bc_cover_free(cover);
    return 0;
}
