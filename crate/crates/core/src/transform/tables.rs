//! Fixed-point DCT-II basis tables, Q14. Generated by
//! tools/gen_dct_tables.py; do not edit by hand.

pub const DCT_SHIFT: u32 = 14;

pub const DCT4: [[i16; 4]; 4] = [
    [8192, 8192, 8192, 8192],
    [10703, 4433, -4433, -10703],
    [8192, -8192, -8192, 8192],
    [4433, -10703, 10703, -4433],
];

pub const DCT8: [[i16; 8]; 8] = [
    [5793, 5793, 5793, 5793, 5793, 5793, 5793, 5793],
    [8035, 6811, 4551, 1598, -1598, -4551, -6811, -8035],
    [7568, 3135, -3135, -7568, -7568, -3135, 3135, 7568],
    [6811, -1598, -8035, -4551, 4551, 8035, 1598, -6811],
    [5793, -5793, -5793, 5793, 5793, -5793, -5793, 5793],
    [4551, -8035, 1598, 6811, -6811, -1598, 8035, -4551],
    [3135, -7568, 7568, -3135, -3135, 7568, -7568, 3135],
    [1598, -4551, 6811, -8035, 8035, -6811, 4551, -1598],
];

pub const DCT16: [[i16; 16]; 16] = [
    [4096, 4096, 4096, 4096, 4096, 4096, 4096, 4096, 4096, 4096, 4096, 4096, 4096, 4096, 4096, 4096],
    [5765, 5543, 5109, 4478, 3675, 2731, 1682, 568, -568, -1682, -2731, -3675, -4478, -5109, -5543, -5765],
    [5681, 4816, 3218, 1130, -1130, -3218, -4816, -5681, -5681, -4816, -3218, -1130, 1130, 3218, 4816, 5681],
    [5543, 3675, 568, -2731, -5109, -5765, -4478, -1682, 1682, 4478, 5765, 5109, 2731, -568, -3675, -5543],
    [5352, 2217, -2217, -5352, -5352, -2217, 2217, 5352, 5352, 2217, -2217, -5352, -5352, -2217, 2217, 5352],
    [5109, 568, -4478, -5543, -1682, 3675, 5765, 2731, -2731, -5765, -3675, 1682, 5543, 4478, -568, -5109],
    [4816, -1130, -5681, -3218, 3218, 5681, 1130, -4816, -4816, 1130, 5681, 3218, -3218, -5681, -1130, 4816],
    [4478, -2731, -5543, 568, 5765, 1682, -5109, -3675, 3675, 5109, -1682, -5765, -568, 5543, 2731, -4478],
    [4096, -4096, -4096, 4096, 4096, -4096, -4096, 4096, 4096, -4096, -4096, 4096, 4096, -4096, -4096, 4096],
    [3675, -5109, -1682, 5765, -568, -5543, 2731, 4478, -4478, -2731, 5543, 568, -5765, 1682, 5109, -3675],
    [3218, -5681, 1130, 4816, -4816, -1130, 5681, -3218, -3218, 5681, -1130, -4816, 4816, 1130, -5681, 3218],
    [2731, -5765, 3675, 1682, -5543, 4478, 568, -5109, 5109, -568, -4478, 5543, -1682, -3675, 5765, -2731],
    [2217, -5352, 5352, -2217, -2217, 5352, -5352, 2217, 2217, -5352, 5352, -2217, -2217, 5352, -5352, 2217],
    [1682, -4478, 5765, -5109, 2731, 568, -3675, 5543, -5543, 3675, -568, -2731, 5109, -5765, 4478, -1682],
    [1130, -3218, 4816, -5681, 5681, -4816, 3218, -1130, -1130, 3218, -4816, 5681, -5681, 4816, -3218, 1130],
    [568, -1682, 2731, -3675, 4478, -5109, 5543, -5765, 5765, -5543, 5109, -4478, 3675, -2731, 1682, -568],
];

pub const DCT32: [[i16; 32]; 32] = [
    [2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896, 2896],
    [4091, 4052, 3973, 3857, 3703, 3513, 3290, 3035, 2751, 2440, 2106, 1751, 1380, 995, 601, 201, -201, -601, -995, -1380, -1751, -2106, -2440, -2751, -3035, -3290, -3513, -3703, -3857, -3973, -4052, -4091],
    [4076, 3920, 3612, 3166, 2598, 1931, 1189, 401, -401, -1189, -1931, -2598, -3166, -3612, -3920, -4076, -4076, -3920, -3612, -3166, -2598, -1931, -1189, -401, 401, 1189, 1931, 2598, 3166, 3612, 3920, 4076],
    [4052, 3703, 3035, 2106, 995, -201, -1380, -2440, -3290, -3857, -4091, -3973, -3513, -2751, -1751, -601, 601, 1751, 2751, 3513, 3973, 4091, 3857, 3290, 2440, 1380, 201, -995, -2106, -3035, -3703, -4052],
    [4017, 3406, 2276, 799, -799, -2276, -3406, -4017, -4017, -3406, -2276, -799, 799, 2276, 3406, 4017, 4017, 3406, 2276, 799, -799, -2276, -3406, -4017, -4017, -3406, -2276, -799, 799, 2276, 3406, 4017],
    [3973, 3035, 1380, -601, -2440, -3703, -4091, -3513, -2106, -201, 1751, 3290, 4052, 3857, 2751, 995, -995, -2751, -3857, -4052, -3290, -1751, 201, 2106, 3513, 4091, 3703, 2440, 601, -1380, -3035, -3973],
    [3920, 2598, 401, -1931, -3612, -4076, -3166, -1189, 1189, 3166, 4076, 3612, 1931, -401, -2598, -3920, -3920, -2598, -401, 1931, 3612, 4076, 3166, 1189, -1189, -3166, -4076, -3612, -1931, 401, 2598, 3920],
    [3857, 2106, -601, -3035, -4091, -3290, -995, 1751, 3703, 3973, 2440, -201, -2751, -4052, -3513, -1380, 1380, 3513, 4052, 2751, 201, -2440, -3973, -3703, -1751, 995, 3290, 4091, 3035, 601, -2106, -3857],
    [3784, 1567, -1567, -3784, -3784, -1567, 1567, 3784, 3784, 1567, -1567, -3784, -3784, -1567, 1567, 3784, 3784, 1567, -1567, -3784, -3784, -1567, 1567, 3784, 3784, 1567, -1567, -3784, -3784, -1567, 1567, 3784],
    [3703, 995, -2440, -4091, -2751, 601, 3513, 3857, 1380, -2106, -4052, -3035, 201, 3290, 3973, 1751, -1751, -3973, -3290, -201, 3035, 4052, 2106, -1380, -3857, -3513, -601, 2751, 4091, 2440, -995, -3703],
    [3612, 401, -3166, -3920, -1189, 2598, 4076, 1931, -1931, -4076, -2598, 1189, 3920, 3166, -401, -3612, -3612, -401, 3166, 3920, 1189, -2598, -4076, -1931, 1931, 4076, 2598, -1189, -3920, -3166, 401, 3612],
    [3513, -201, -3703, -3290, 601, 3857, 3035, -995, -3973, -2751, 1380, 4052, 2440, -1751, -4091, -2106, 2106, 4091, 1751, -2440, -4052, -1380, 2751, 3973, 995, -3035, -3857, -601, 3290, 3703, 201, -3513],
    [3406, -799, -4017, -2276, 2276, 4017, 799, -3406, -3406, 799, 4017, 2276, -2276, -4017, -799, 3406, 3406, -799, -4017, -2276, 2276, 4017, 799, -3406, -3406, 799, 4017, 2276, -2276, -4017, -799, 3406],
    [3290, -1380, -4091, -995, 3513, 3035, -1751, -4052, -601, 3703, 2751, -2106, -3973, -201, 3857, 2440, -2440, -3857, 201, 3973, 2106, -2751, -3703, 601, 4052, 1751, -3035, -3513, 995, 4091, 1380, -3290],
    [3166, -1931, -3920, 401, 4076, 1189, -3612, -2598, 2598, 3612, -1189, -4076, -401, 3920, 1931, -3166, -3166, 1931, 3920, -401, -4076, -1189, 3612, 2598, -2598, -3612, 1189, 4076, 401, -3920, -1931, 3166],
    [3035, -2440, -3513, 1751, 3857, -995, -4052, 201, 4091, 601, -3973, -1380, 3703, 2106, -3290, -2751, 2751, 3290, -2106, -3703, 1380, 3973, -601, -4091, -201, 4052, 995, -3857, -1751, 3513, 2440, -3035],
    [2896, -2896, -2896, 2896, 2896, -2896, -2896, 2896, 2896, -2896, -2896, 2896, 2896, -2896, -2896, 2896, 2896, -2896, -2896, 2896, 2896, -2896, -2896, 2896, 2896, -2896, -2896, 2896, 2896, -2896, -2896, 2896],
    [2751, -3290, -2106, 3703, 1380, -3973, -601, 4091, -201, -4052, 995, 3857, -1751, -3513, 2440, 3035, -3035, -2440, 3513, 1751, -3857, -995, 4052, 201, -4091, 601, 3973, -1380, -3703, 2106, 3290, -2751],
    [2598, -3612, -1189, 4076, -401, -3920, 1931, 3166, -3166, -1931, 3920, 401, -4076, 1189, 3612, -2598, -2598, 3612, 1189, -4076, 401, 3920, -1931, -3166, 3166, 1931, -3920, -401, 4076, -1189, -3612, 2598],
    [2440, -3857, -201, 3973, -2106, -2751, 3703, 601, -4052, 1751, 3035, -3513, -995, 4091, -1380, -3290, 3290, 1380, -4091, 995, 3513, -3035, -1751, 4052, -601, -3703, 2751, 2106, -3973, 201, 3857, -2440],
    [2276, -4017, 799, 3406, -3406, -799, 4017, -2276, -2276, 4017, -799, -3406, 3406, 799, -4017, 2276, 2276, -4017, 799, 3406, -3406, -799, 4017, -2276, -2276, 4017, -799, -3406, 3406, 799, -4017, 2276],
    [2106, -4091, 1751, 2440, -4052, 1380, 2751, -3973, 995, 3035, -3857, 601, 3290, -3703, 201, 3513, -3513, -201, 3703, -3290, -601, 3857, -3035, -995, 3973, -2751, -1380, 4052, -2440, -1751, 4091, -2106],
    [1931, -4076, 2598, 1189, -3920, 3166, 401, -3612, 3612, -401, -3166, 3920, -1189, -2598, 4076, -1931, -1931, 4076, -2598, -1189, 3920, -3166, -401, 3612, -3612, 401, 3166, -3920, 1189, 2598, -4076, 1931],
    [1751, -3973, 3290, -201, -3035, 4052, -2106, -1380, 3857, -3513, 601, 2751, -4091, 2440, 995, -3703, 3703, -995, -2440, 4091, -2751, -601, 3513, -3857, 1380, 2106, -4052, 3035, 201, -3290, 3973, -1751],
    [1567, -3784, 3784, -1567, -1567, 3784, -3784, 1567, 1567, -3784, 3784, -1567, -1567, 3784, -3784, 1567, 1567, -3784, 3784, -1567, -1567, 3784, -3784, 1567, 1567, -3784, 3784, -1567, -1567, 3784, -3784, 1567],
    [1380, -3513, 4052, -2751, 201, 2440, -3973, 3703, -1751, -995, 3290, -4091, 3035, -601, -2106, 3857, -3857, 2106, 601, -3035, 4091, -3290, 995, 1751, -3703, 3973, -2440, -201, 2751, -4052, 3513, -1380],
    [1189, -3166, 4076, -3612, 1931, 401, -2598, 3920, -3920, 2598, -401, -1931, 3612, -4076, 3166, -1189, -1189, 3166, -4076, 3612, -1931, -401, 2598, -3920, 3920, -2598, 401, 1931, -3612, 4076, -3166, 1189],
    [995, -2751, 3857, -4052, 3290, -1751, -201, 2106, -3513, 4091, -3703, 2440, -601, -1380, 3035, -3973, 3973, -3035, 1380, 601, -2440, 3703, -4091, 3513, -2106, 201, 1751, -3290, 4052, -3857, 2751, -995],
    [799, -2276, 3406, -4017, 4017, -3406, 2276, -799, -799, 2276, -3406, 4017, -4017, 3406, -2276, 799, 799, -2276, 3406, -4017, 4017, -3406, 2276, -799, -799, 2276, -3406, 4017, -4017, 3406, -2276, 799],
    [601, -1751, 2751, -3513, 3973, -4091, 3857, -3290, 2440, -1380, 201, 995, -2106, 3035, -3703, 4052, -4052, 3703, -3035, 2106, -995, -201, 1380, -2440, 3290, -3857, 4091, -3973, 3513, -2751, 1751, -601],
    [401, -1189, 1931, -2598, 3166, -3612, 3920, -4076, 4076, -3920, 3612, -3166, 2598, -1931, 1189, -401, -401, 1189, -1931, 2598, -3166, 3612, -3920, 4076, -4076, 3920, -3612, 3166, -2598, 1931, -1189, 401],
    [201, -601, 995, -1380, 1751, -2106, 2440, -2751, 3035, -3290, 3513, -3703, 3857, -3973, 4052, -4091, 4091, -4052, 3973, -3857, 3703, -3513, 3290, -3035, 2751, -2440, 2106, -1751, 1380, -995, 601, -201],
];

pub const DCT64: [[i16; 64]; 64] = [
    [2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048, 2048],
    [2895, 2888, 2875, 2854, 2826, 2791, 2750, 2702, 2648, 2587, 2520, 2447, 2368, 2283, 2193, 2098, 1997, 1892, 1782, 1668, 1550, 1428, 1302, 1174, 1042, 909, 772, 635, 495, 355, 213, 71, -71, -213, -355, -495, -635, -772, -909, -1042, -1174, -1302, -1428, -1550, -1668, -1782, -1892, -1997, -2098, -2193, -2283, -2368, -2447, -2520, -2587, -2648, -2702, -2750, -2791, -2826, -2854, -2875, -2888, -2895],
    [2893, 2865, 2810, 2727, 2618, 2484, 2326, 2146, 1945, 1725, 1489, 1238, 976, 704, 425, 142, -142, -425, -704, -976, -1238, -1489, -1725, -1945, -2146, -2326, -2484, -2618, -2727, -2810, -2865, -2893, -2893, -2865, -2810, -2727, -2618, -2484, -2326, -2146, -1945, -1725, -1489, -1238, -976, -704, -425, -142, 142, 425, 704, 976, 1238, 1489, 1725, 1945, 2146, 2326, 2484, 2618, 2727, 2810, 2865, 2893],
    [2888, 2826, 2702, 2520, 2283, 1997, 1668, 1302, 909, 495, 71, -355, -772, -1174, -1550, -1892, -2193, -2447, -2648, -2791, -2875, -2895, -2854, -2750, -2587, -2368, -2098, -1782, -1428, -1042, -635, -213, 213, 635, 1042, 1428, 1782, 2098, 2368, 2587, 2750, 2854, 2895, 2875, 2791, 2648, 2447, 2193, 1892, 1550, 1174, 772, 355, -71, -495, -909, -1302, -1668, -1997, -2283, -2520, -2702, -2826, -2888],
    [2882, 2772, 2554, 2239, 1837, 1365, 841, 284, -284, -841, -1365, -1837, -2239, -2554, -2772, -2882, -2882, -2772, -2554, -2239, -1837, -1365, -841, -284, 284, 841, 1365, 1837, 2239, 2554, 2772, 2882, 2882, 2772, 2554, 2239, 1837, 1365, 841, 284, -284, -841, -1365, -1837, -2239, -2554, -2772, -2882, -2882, -2772, -2554, -2239, -1837, -1365, -841, -284, 284, 841, 1365, 1837, 2239, 2554, 2772, 2882],
    [2875, 2702, 2368, 1892, 1302, 635, -71, -772, -1428, -1997, -2447, -2750, -2888, -2854, -2648, -2283, -1782, -1174, -495, 213, 909, 1550, 2098, 2520, 2791, 2895, 2826, 2587, 2193, 1668, 1042, 355, -355, -1042, -1668, -2193, -2587, -2826, -2895, -2791, -2520, -2098, -1550, -909, -213, 495, 1174, 1782, 2283, 2648, 2854, 2888, 2750, 2447, 1997, 1428, 772, 71, -635, -1302, -1892, -2368, -2702, -2875],
    [2865, 2618, 2146, 1489, 704, -142, -976, -1725, -2326, -2727, -2893, -2810, -2484, -1945, -1238, -425, 425, 1238, 1945, 2484, 2810, 2893, 2727, 2326, 1725, 976, 142, -704, -1489, -2146, -2618, -2865, -2865, -2618, -2146, -1489, -704, 142, 976, 1725, 2326, 2727, 2893, 2810, 2484, 1945, 1238, 425, -425, -1238, -1945, -2484, -2810, -2893, -2727, -2326, -1725, -976, -142, 704, 1489, 2146, 2618, 2865],
    [2854, 2520, 1892, 1042, 71, -909, -1782, -2447, -2826, -2875, -2587, -1997, -1174, -213, 772, 1668, 2368, 2791, 2888, 2648, 2098, 1302, 355, -635, -1550, -2283, -2750, -2895, -2702, -2193, -1428, -495, 495, 1428, 2193, 2702, 2895, 2750, 2283, 1550, 635, -355, -1302, -2098, -2648, -2888, -2791, -2368, -1668, -772, 213, 1174, 1997, 2587, 2875, 2826, 2447, 1782, 909, -71, -1042, -1892, -2520, -2854],
    [2841, 2408, 1609, 565, -565, -1609, -2408, -2841, -2841, -2408, -1609, -565, 565, 1609, 2408, 2841, 2841, 2408, 1609, 565, -565, -1609, -2408, -2841, -2841, -2408, -1609, -565, 565, 1609, 2408, 2841, 2841, 2408, 1609, 565, -565, -1609, -2408, -2841, -2841, -2408, -1609, -565, 565, 1609, 2408, 2841, 2841, 2408, 1609, 565, -565, -1609, -2408, -2841, -2841, -2408, -1609, -565, 565, 1609, 2408, 2841],
    [2826, 2283, 1302, 71, -1174, -2193, -2791, -2854, -2368, -1428, -213, 1042, 2098, 2750, 2875, 2447, 1550, 355, -909, -1997, -2702, -2888, -2520, -1668, -495, 772, 1892, 2648, 2895, 2587, 1782, 635, -635, -1782, -2587, -2895, -2648, -1892, -772, 495, 1668, 2520, 2888, 2702, 1997, 909, -355, -1550, -2447, -2875, -2750, -2098, -1042, 213, 1428, 2368, 2854, 2791, 2193, 1174, -71, -1302, -2283, -2826],
    [2810, 2146, 976, -425, -1725, -2618, -2893, -2484, -1489, -142, 1238, 2326, 2865, 2727, 1945, 704, -704, -1945, -2727, -2865, -2326, -1238, 142, 1489, 2484, 2893, 2618, 1725, 425, -976, -2146, -2810, -2810, -2146, -976, 425, 1725, 2618, 2893, 2484, 1489, 142, -1238, -2326, -2865, -2727, -1945, -704, 704, 1945, 2727, 2865, 2326, 1238, -142, -1489, -2484, -2893, -2618, -1725, -425, 976, 2146, 2810],
    [2791, 1997, 635, -909, -2193, -2854, -2702, -1782, -355, 1174, 2368, 2888, 2587, 1550, 71, -1428, -2520, -2895, -2447, -1302, 213, 1668, 2648, 2875, 2283, 1042, -495, -1892, -2750, -2826, -2098, -772, 772, 2098, 2826, 2750, 1892, 495, -1042, -2283, -2875, -2648, -1668, -213, 1302, 2447, 2895, 2520, 1428, -71, -1550, -2587, -2888, -2368, -1174, 355, 1782, 2702, 2854, 2193, 909, -635, -1997, -2791],
    [2772, 1837, 284, -1365, -2554, -2882, -2239, -841, 841, 2239, 2882, 2554, 1365, -284, -1837, -2772, -2772, -1837, -284, 1365, 2554, 2882, 2239, 841, -841, -2239, -2882, -2554, -1365, 284, 1837, 2772, 2772, 1837, 284, -1365, -2554, -2882, -2239, -841, 841, 2239, 2882, 2554, 1365, -284, -1837, -2772, -2772, -1837, -284, 1365, 2554, 2882, 2239, 841, -841, -2239, -2882, -2554, -1365, 284, 1837, 2772],
    [2750, 1668, -71, -1782, -2791, -2702, -1550, 213, 1892, 2826, 2648, 1428, -355, -1997, -2854, -2587, -1302, 495, 2098, 2875, 2520, 1174, -635, -2193, -2888, -2447, -1042, 772, 2283, 2895, 2368, 909, -909, -2368, -2895, -2283, -772, 1042, 2447, 2888, 2193, 635, -1174, -2520, -2875, -2098, -495, 1302, 2587, 2854, 1997, 355, -1428, -2648, -2826, -1892, -213, 1550, 2702, 2791, 1782, 71, -1668, -2750],
    [2727, 1489, -425, -2146, -2893, -2326, -704, 1238, 2618, 2810, 1725, -142, -1945, -2865, -2484, -976, 976, 2484, 2865, 1945, 142, -1725, -2810, -2618, -1238, 704, 2326, 2893, 2146, 425, -1489, -2727, -2727, -1489, 425, 2146, 2893, 2326, 704, -1238, -2618, -2810, -1725, 142, 1945, 2865, 2484, 976, -976, -2484, -2865, -1945, -142, 1725, 2810, 2618, 1238, -704, -2326, -2893, -2146, -425, 1489, 2727],
    [2702, 1302, -772, -2447, -2854, -1782, 213, 2098, 2895, 2193, 355, -1668, -2826, -2520, -909, 1174, 2648, 2750, 1428, -635, -2368, -2875, -1892, 71, 1997, 2888, 2283, 495, -1550, -2791, -2587, -1042, 1042, 2587, 2791, 1550, -495, -2283, -2888, -1997, -71, 1892, 2875, 2368, 635, -1428, -2750, -2648, -1174, 909, 2520, 2826, 1668, -355, -2193, -2895, -2098, -213, 1782, 2854, 2447, 772, -1302, -2702],
    [2676, 1108, -1108, -2676, -2676, -1108, 1108, 2676, 2676, 1108, -1108, -2676, -2676, -1108, 1108, 2676, 2676, 1108, -1108, -2676, -2676, -1108, 1108, 2676, 2676, 1108, -1108, -2676, -2676, -1108, 1108, 2676, 2676, 1108, -1108, -2676, -2676, -1108, 1108, 2676, 2676, 1108, -1108, -2676, -2676, -1108, 1108, 2676, 2676, 1108, -1108, -2676, -2676, -1108, 1108, 2676, 2676, 1108, -1108, -2676, -2676, -1108, 1108, 2676],
    [2648, 909, -1428, -2826, -2368, -355, 1892, 2895, 1997, -213, -2283, -2854, -1550, 772, 2587, 2702, 1042, -1302, -2791, -2447, -495, 1782, 2888, 2098, -71, -2193, -2875, -1668, 635, 2520, 2750, 1174, -1174, -2750, -2520, -635, 1668, 2875, 2193, 71, -2098, -2888, -1782, 495, 2447, 2791, 1302, -1042, -2702, -2587, -772, 1550, 2854, 2283, 213, -1997, -2895, -1892, 355, 2368, 2826, 1428, -909, -2648],
    [2618, 704, -1725, -2893, -1945, 425, 2484, 2727, 976, -1489, -2865, -2146, 142, 2326, 2810, 1238, -1238, -2810, -2326, -142, 2146, 2865, 1489, -976, -2727, -2484, -425, 1945, 2893, 1725, -704, -2618, -2618, -704, 1725, 2893, 1945, -425, -2484, -2727, -976, 1489, 2865, 2146, -142, -2326, -2810, -1238, 1238, 2810, 2326, 142, -2146, -2865, -1489, 976, 2727, 2484, 425, -1945, -2893, -1725, 704, 2618],
    [2587, 495, -1997, -2875, -1428, 1174, 2826, 2193, -213, -2447, -2702, -772, 1782, 2895, 1668, -909, -2750, -2368, -71, 2283, 2791, 1042, -1550, -2888, -1892, 635, 2648, 2520, 355, -2098, -2854, -1302, 1302, 2854, 2098, -355, -2520, -2648, -635, 1892, 2888, 1550, -1042, -2791, -2283, 71, 2368, 2750, 909, -1668, -2895, -1782, 772, 2702, 2447, 213, -2193, -2826, -1174, 1428, 2875, 1997, -495, -2587],
    [2554, 284, -2239, -2772, -841, 1837, 2882, 1365, -1365, -2882, -1837, 841, 2772, 2239, -284, -2554, -2554, -284, 2239, 2772, 841, -1837, -2882, -1365, 1365, 2882, 1837, -841, -2772, -2239, 284, 2554, 2554, 284, -2239, -2772, -841, 1837, 2882, 1365, -1365, -2882, -1837, 841, 2772, 2239, -284, -2554, -2554, -284, 2239, 2772, 841, -1837, -2882, -1365, 1365, 2882, 1837, -841, -2772, -2239, 284, 2554],
    [2520, 71, -2447, -2587, -213, 2368, 2648, 355, -2283, -2702, -495, 2193, 2750, 635, -2098, -2791, -772, 1997, 2826, 909, -1892, -2854, -1042, 1782, 2875, 1174, -1668, -2888, -1302, 1550, 2895, 1428, -1428, -2895, -1550, 1302, 2888, 1668, -1174, -2875, -1782, 1042, 2854, 1892, -909, -2826, -1997, 772, 2791, 2098, -635, -2750, -2193, 495, 2702, 2283, -355, -2648, -2368, 213, 2587, 2447, -71, -2520],
    [2484, -142, -2618, -2326, 425, 2727, 2146, -704, -2810, -1945, 976, 2865, 1725, -1238, -2893, -1489, 1489, 2893, 1238, -1725, -2865, -976, 1945, 2810, 704, -2146, -2727, -425, 2326, 2618, 142, -2484, -2484, 142, 2618, 2326, -425, -2727, -2146, 704, 2810, 1945, -976, -2865, -1725, 1238, 2893, 1489, -1489, -2893, -1238, 1725, 2865, 976, -1945, -2810, -704, 2146, 2727, 425, -2326, -2618, -142, 2484],
    [2447, -355, -2750, -1997, 1042, 2888, 1428, -1668, -2854, -772, 2193, 2648, 71, -2587, -2283, 635, 2826, 1782, -1302, -2895, -1174, 1892, 2791, 495, -2368, -2520, 213, 2702, 2098, -909, -2875, -1550, 1550, 2875, 909, -2098, -2702, -213, 2520, 2368, -495, -2791, -1892, 1174, 2895, 1302, -1782, -2826, -635, 2283, 2587, -71, -2648, -2193, 772, 2854, 1668, -1428, -2888, -1042, 1997, 2750, 355, -2447],
    [2408, -565, -2841, -1609, 1609, 2841, 565, -2408, -2408, 565, 2841, 1609, -1609, -2841, -565, 2408, 2408, -565, -2841, -1609, 1609, 2841, 565, -2408, -2408, 565, 2841, 1609, -1609, -2841, -565, 2408, 2408, -565, -2841, -1609, 1609, 2841, 565, -2408, -2408, 565, 2841, 1609, -1609, -2841, -565, 2408, 2408, -565, -2841, -1609, 1609, 2841, 565, -2408, -2408, 565, 2841, 1609, -1609, -2841, -565, 2408],
    [2368, -772, -2888, -1174, 2098, 2587, -355, -2826, -1550, 1782, 2750, 71, -2702, -1892, 1428, 2854, 495, -2520, -2193, 1042, 2895, 909, -2283, -2447, 635, 2875, 1302, -1997, -2648, 213, 2791, 1668, -1668, -2791, -213, 2648, 1997, -1302, -2875, -635, 2447, 2283, -909, -2895, -1042, 2193, 2520, -495, -2854, -1428, 1892, 2702, -71, -2750, -1782, 1550, 2826, 355, -2587, -2098, 1174, 2888, 772, -2368],
    [2326, -976, -2893, -704, 2484, 2146, -1238, -2865, -425, 2618, 1945, -1489, -2810, -142, 2727, 1725, -1725, -2727, 142, 2810, 1489, -1945, -2618, 425, 2865, 1238, -2146, -2484, 704, 2893, 976, -2326, -2326, 976, 2893, 704, -2484, -2146, 1238, 2865, 425, -2618, -1945, 1489, 2810, 142, -2727, -1725, 1725, 2727, -142, -2810, -1489, 1945, 2618, -425, -2865, -1238, 2146, 2484, -704, -2893, -976, 2326],
    [2283, -1174, -2854, -213, 2750, 1550, -1997, -2520, 772, 2895, 635, -2587, -1892, 1668, 2702, -355, -2875, -1042, 2368, 2193, -1302, -2826, -71, 2791, 1428, -2098, -2447, 909, 2888, 495, -2648, -1782, 1782, 2648, -495, -2888, -909, 2447, 2098, -1428, -2791, 71, 2826, 1302, -2193, -2368, 1042, 2875, 355, -2702, -1668, 1892, 2587, -635, -2895, -772, 2520, 1997, -1550, -2750, 213, 2854, 1174, -2283],
    [2239, -1365, -2772, 284, 2882, 841, -2554, -1837, 1837, 2554, -841, -2882, -284, 2772, 1365, -2239, -2239, 1365, 2772, -284, -2882, -841, 2554, 1837, -1837, -2554, 841, 2882, 284, -2772, -1365, 2239, 2239, -1365, -2772, 284, 2882, 841, -2554, -1837, 1837, 2554, -841, -2882, -284, 2772, 1365, -2239, -2239, 1365, 2772, -284, -2882, -841, 2554, 1837, -1837, -2554, 841, 2882, 284, -2772, -1365, 2239],
    [2193, -1550, -2648, 772, 2875, 71, -2854, -909, 2587, 1668, -2098, -2283, 1428, 2702, -635, -2888, -213, 2826, 1042, -2520, -1782, 1997, 2368, -1302, -2750, 495, 2895, 355, -2791, -1174, 2447, 1892, -1892, -2447, 1174, 2791, -355, -2895, -495, 2750, 1302, -2368, -1997, 1782, 2520, -1042, -2826, 213, 2888, 635, -2702, -1428, 2283, 2098, -1668, -2587, 909, 2854, -71, -2875, -772, 2648, 1550, -2193],
    [2146, -1725, -2484, 1238, 2727, -704, -2865, 142, 2893, 425, -2810, -976, 2618, 1489, -2326, -1945, 1945, 2326, -1489, -2618, 976, 2810, -425, -2893, -142, 2865, 704, -2727, -1238, 2484, 1725, -2146, -2146, 1725, 2484, -1238, -2727, 704, 2865, -142, -2893, -425, 2810, 976, -2618, -1489, 2326, 1945, -1945, -2326, 1489, 2618, -976, -2810, 425, 2893, 142, -2865, -704, 2727, 1238, -2484, -1725, 2146],
    [2098, -1892, -2283, 1668, 2447, -1428, -2587, 1174, 2702, -909, -2791, 635, 2854, -355, -2888, 71, 2895, 213, -2875, -495, 2826, 772, -2750, -1042, 2648, 1302, -2520, -1550, 2368, 1782, -2193, -1997, 1997, 2193, -1782, -2368, 1550, 2520, -1302, -2648, 1042, 2750, -772, -2826, 495, 2875, -213, -2895, -71, 2888, 355, -2854, -635, 2791, 909, -2702, -1174, 2587, 1428, -2447, -1668, 2283, 1892, -2098],
    [2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048, 2048, -2048, -2048, 2048],
    [1997, -2193, -1782, 2368, 1550, -2520, -1302, 2648, 1042, -2750, -772, 2826, 495, -2875, -213, 2895, -71, -2888, 355, 2854, -635, -2791, 909, 2702, -1174, -2587, 1428, 2447, -1668, -2283, 1892, 2098, -2098, -1892, 2283, 1668, -2447, -1428, 2587, 1174, -2702, -909, 2791, 635, -2854, -355, 2888, 71, -2895, 213, 2875, -495, -2826, 772, 2750, -1042, -2648, 1302, 2520, -1550, -2368, 1782, 2193, -1997],
    [1945, -2326, -1489, 2618, 976, -2810, -425, 2893, -142, -2865, 704, 2727, -1238, -2484, 1725, 2146, -2146, -1725, 2484, 1238, -2727, -704, 2865, 142, -2893, 425, 2810, -976, -2618, 1489, 2326, -1945, -1945, 2326, 1489, -2618, -976, 2810, 425, -2893, 142, 2865, -704, -2727, 1238, 2484, -1725, -2146, 2146, 1725, -2484, -1238, 2727, 704, -2865, -142, 2893, -425, -2810, 976, 2618, -1489, -2326, 1945],
    [1892, -2447, -1174, 2791, 355, -2895, 495, 2750, -1302, -2368, 1997, 1782, -2520, -1042, 2826, 213, -2888, 635, 2702, -1428, -2283, 2098, 1668, -2587, -909, 2854, 71, -2875, 772, 2648, -1550, -2193, 2193, 1550, -2648, -772, 2875, -71, -2854, 909, 2587, -1668, -2098, 2283, 1428, -2702, -635, 2888, -213, -2826, 1042, 2520, -1782, -1997, 2368, 1302, -2750, -495, 2895, -355, -2791, 1174, 2447, -1892],
    [1837, -2554, -841, 2882, -284, -2772, 1365, 2239, -2239, -1365, 2772, 284, -2882, 841, 2554, -1837, -1837, 2554, 841, -2882, 284, 2772, -1365, -2239, 2239, 1365, -2772, -284, 2882, -841, -2554, 1837, 1837, -2554, -841, 2882, -284, -2772, 1365, 2239, -2239, -1365, 2772, 284, -2882, 841, 2554, -1837, -1837, 2554, 841, -2882, 284, 2772, -1365, -2239, 2239, 1365, -2772, -284, 2882, -841, -2554, 1837],
    [1782, -2648, -495, 2888, -909, -2447, 2098, 1428, -2791, -71, 2826, -1302, -2193, 2368, 1042, -2875, 355, 2702, -1668, -1892, 2587, 635, -2895, 772, 2520, -1997, -1550, 2750, 213, -2854, 1174, 2283, -2283, -1174, 2854, -213, -2750, 1550, 1997, -2520, -772, 2895, -635, -2587, 1892, 1668, -2702, -355, 2875, -1042, -2368, 2193, 1302, -2826, 71, 2791, -1428, -2098, 2447, 909, -2888, 495, 2648, -1782],
    [1725, -2727, -142, 2810, -1489, -1945, 2618, 425, -2865, 1238, 2146, -2484, -704, 2893, -976, -2326, 2326, 976, -2893, 704, 2484, -2146, -1238, 2865, -425, -2618, 1945, 1489, -2810, 142, 2727, -1725, -1725, 2727, 142, -2810, 1489, 1945, -2618, -425, 2865, -1238, -2146, 2484, 704, -2893, 976, 2326, -2326, -976, 2893, -704, -2484, 2146, 1238, -2865, 425, 2618, -1945, -1489, 2810, -142, -2727, 1725],
    [1668, -2791, 213, 2648, -1997, -1302, 2875, -635, -2447, 2283, 909, -2895, 1042, 2193, -2520, -495, 2854, -1428, -1892, 2702, 71, -2750, 1782, 1550, -2826, 355, 2587, -2098, -1174, 2888, -772, -2368, 2368, 772, -2888, 1174, 2098, -2587, -355, 2826, -1550, -1782, 2750, -71, -2702, 1892, 1428, -2854, 495, 2520, -2193, -1042, 2895, -909, -2283, 2447, 635, -2875, 1302, 1997, -2648, -213, 2791, -1668],
    [1609, -2841, 565, 2408, -2408, -565, 2841, -1609, -1609, 2841, -565, -2408, 2408, 565, -2841, 1609, 1609, -2841, 565, 2408, -2408, -565, 2841, -1609, -1609, 2841, -565, -2408, 2408, 565, -2841, 1609, 1609, -2841, 565, 2408, -2408, -565, 2841, -1609, -1609, 2841, -565, -2408, 2408, 565, -2841, 1609, 1609, -2841, 565, 2408, -2408, -565, 2841, -1609, -1609, 2841, -565, -2408, 2408, 565, -2841, 1609],
    [1550, -2875, 909, 2098, -2702, 213, 2520, -2368, -495, 2791, -1892, -1174, 2895, -1302, -1782, 2826, -635, -2283, 2587, 71, -2648, 2193, 772, -2854, 1668, 1428, -2888, 1042, 1997, -2750, 355, 2447, -2447, -355, 2750, -1997, -1042, 2888, -1428, -1668, 2854, -772, -2193, 2648, -71, -2587, 2283, 635, -2826, 1782, 1302, -2895, 1174, 1892, -2791, 495, 2368, -2520, -213, 2702, -2098, -909, 2875, -1550],
    [1489, -2893, 1238, 1725, -2865, 976, 1945, -2810, 704, 2146, -2727, 425, 2326, -2618, 142, 2484, -2484, -142, 2618, -2326, -425, 2727, -2146, -704, 2810, -1945, -976, 2865, -1725, -1238, 2893, -1489, -1489, 2893, -1238, -1725, 2865, -976, -1945, 2810, -704, -2146, 2727, -425, -2326, 2618, -142, -2484, 2484, 142, -2618, 2326, 425, -2727, 2146, 704, -2810, 1945, 976, -2865, 1725, 1238, -2893, 1489],
    [1428, -2895, 1550, 1302, -2888, 1668, 1174, -2875, 1782, 1042, -2854, 1892, 909, -2826, 1997, 772, -2791, 2098, 635, -2750, 2193, 495, -2702, 2283, 355, -2648, 2368, 213, -2587, 2447, 71, -2520, 2520, -71, -2447, 2587, -213, -2368, 2648, -355, -2283, 2702, -495, -2193, 2750, -635, -2098, 2791, -772, -1997, 2826, -909, -1892, 2854, -1042, -1782, 2875, -1174, -1668, 2888, -1302, -1550, 2895, -1428],
    [1365, -2882, 1837, 841, -2772, 2239, 284, -2554, 2554, -284, -2239, 2772, -841, -1837, 2882, -1365, -1365, 2882, -1837, -841, 2772, -2239, -284, 2554, -2554, 284, 2239, -2772, 841, 1837, -2882, 1365, 1365, -2882, 1837, 841, -2772, 2239, 284, -2554, 2554, -284, -2239, 2772, -841, -1837, 2882, -1365, -1365, 2882, -1837, -841, 2772, -2239, -284, 2554, -2554, 284, 2239, -2772, 841, 1837, -2882, 1365],
    [1302, -2854, 2098, 355, -2520, 2648, -635, -1892, 2888, -1550, -1042, 2791, -2283, -71, 2368, -2750, 909, 1668, -2895, 1782, 772, -2702, 2447, -213, -2193, 2826, -1174, -1428, 2875, -1997, -495, 2587, -2587, 495, 1997, -2875, 1428, 1174, -2826, 2193, 213, -2447, 2702, -772, -1782, 2895, -1668, -909, 2750, -2368, 71, 2283, -2791, 1042, 1550, -2888, 1892, 635, -2648, 2520, -355, -2098, 2854, -1302],
    [1238, -2810, 2326, -142, -2146, 2865, -1489, -976, 2727, -2484, 425, 1945, -2893, 1725, 704, -2618, 2618, -704, -1725, 2893, -1945, -425, 2484, -2727, 976, 1489, -2865, 2146, 142, -2326, 2810, -1238, -1238, 2810, -2326, 142, 2146, -2865, 1489, 976, -2727, 2484, -425, -1945, 2893, -1725, -704, 2618, -2618, 704, 1725, -2893, 1945, 425, -2484, 2727, -976, -1489, 2865, -2146, -142, 2326, -2810, 1238],
    [1174, -2750, 2520, -635, -1668, 2875, -2193, 71, 2098, -2888, 1782, 495, -2447, 2791, -1302, -1042, 2702, -2587, 772, 1550, -2854, 2283, -213, -1997, 2895, -1892, -355, 2368, -2826, 1428, 909, -2648, 2648, -909, -1428, 2826, -2368, 355, 1892, -2895, 1997, 213, -2283, 2854, -1550, -772, 2587, -2702, 1042, 1302, -2791, 2447, -495, -1782, 2888, -2098, -71, 2193, -2875, 1668, 635, -2520, 2750, -1174],
    [1108, -2676, 2676, -1108, -1108, 2676, -2676, 1108, 1108, -2676, 2676, -1108, -1108, 2676, -2676, 1108, 1108, -2676, 2676, -1108, -1108, 2676, -2676, 1108, 1108, -2676, 2676, -1108, -1108, 2676, -2676, 1108, 1108, -2676, 2676, -1108, -1108, 2676, -2676, 1108, 1108, -2676, 2676, -1108, -1108, 2676, -2676, 1108, 1108, -2676, 2676, -1108, -1108, 2676, -2676, 1108, 1108, -2676, 2676, -1108, -1108, 2676, -2676, 1108],
    [1042, -2587, 2791, -1550, -495, 2283, -2888, 1997, -71, -1892, 2875, -2368, 635, 1428, -2750, 2648, -1174, -909, 2520, -2826, 1668, 355, -2193, 2895, -2098, 213, 1782, -2854, 2447, -772, -1302, 2702, -2702, 1302, 772, -2447, 2854, -1782, -213, 2098, -2895, 2193, -355, -1668, 2826, -2520, 909, 1174, -2648, 2750, -1428, -635, 2368, -2875, 1892, 71, -1997, 2888, -2283, 495, 1550, -2791, 2587, -1042],
    [976, -2484, 2865, -1945, 142, 1725, -2810, 2618, -1238, -704, 2326, -2893, 2146, -425, -1489, 2727, -2727, 1489, 425, -2146, 2893, -2326, 704, 1238, -2618, 2810, -1725, -142, 1945, -2865, 2484, -976, -976, 2484, -2865, 1945, -142, -1725, 2810, -2618, 1238, 704, -2326, 2893, -2146, 425, 1489, -2727, 2727, -1489, -425, 2146, -2893, 2326, -704, -1238, 2618, -2810, 1725, 142, -1945, 2865, -2484, 976],
    [909, -2368, 2895, -2283, 772, 1042, -2447, 2888, -2193, 635, 1174, -2520, 2875, -2098, 495, 1302, -2587, 2854, -1997, 355, 1428, -2648, 2826, -1892, 213, 1550, -2702, 2791, -1782, 71, 1668, -2750, 2750, -1668, -71, 1782, -2791, 2702, -1550, -213, 1892, -2826, 2648, -1428, -355, 1997, -2854, 2587, -1302, -495, 2098, -2875, 2520, -1174, -635, 2193, -2888, 2447, -1042, -772, 2283, -2895, 2368, -909],
    [841, -2239, 2882, -2554, 1365, 284, -1837, 2772, -2772, 1837, -284, -1365, 2554, -2882, 2239, -841, -841, 2239, -2882, 2554, -1365, -284, 1837, -2772, 2772, -1837, 284, 1365, -2554, 2882, -2239, 841, 841, -2239, 2882, -2554, 1365, 284, -1837, 2772, -2772, 1837, -284, -1365, 2554, -2882, 2239, -841, -841, 2239, -2882, 2554, -1365, -284, 1837, -2772, 2772, -1837, 284, 1365, -2554, 2882, -2239, 841],
    [772, -2098, 2826, -2750, 1892, -495, -1042, 2283, -2875, 2648, -1668, 213, 1302, -2447, 2895, -2520, 1428, 71, -1550, 2587, -2888, 2368, -1174, -355, 1782, -2702, 2854, -2193, 909, 635, -1997, 2791, -2791, 1997, -635, -909, 2193, -2854, 2702, -1782, 355, 1174, -2368, 2888, -2587, 1550, -71, -1428, 2520, -2895, 2447, -1302, -213, 1668, -2648, 2875, -2283, 1042, 495, -1892, 2750, -2826, 2098, -772],
    [704, -1945, 2727, -2865, 2326, -1238, -142, 1489, -2484, 2893, -2618, 1725, -425, -976, 2146, -2810, 2810, -2146, 976, 425, -1725, 2618, -2893, 2484, -1489, 142, 1238, -2326, 2865, -2727, 1945, -704, -704, 1945, -2727, 2865, -2326, 1238, 142, -1489, 2484, -2893, 2618, -1725, 425, 976, -2146, 2810, -2810, 2146, -976, -425, 1725, -2618, 2893, -2484, 1489, -142, -1238, 2326, -2865, 2727, -1945, 704],
    [635, -1782, 2587, -2895, 2648, -1892, 772, 495, -1668, 2520, -2888, 2702, -1997, 909, 355, -1550, 2447, -2875, 2750, -2098, 1042, 213, -1428, 2368, -2854, 2791, -2193, 1174, 71, -1302, 2283, -2826, 2826, -2283, 1302, -71, -1174, 2193, -2791, 2854, -2368, 1428, -213, -1042, 2098, -2750, 2875, -2447, 1550, -355, -909, 1997, -2702, 2888, -2520, 1668, -495, -772, 1892, -2648, 2895, -2587, 1782, -635],
    [565, -1609, 2408, -2841, 2841, -2408, 1609, -565, -565, 1609, -2408, 2841, -2841, 2408, -1609, 565, 565, -1609, 2408, -2841, 2841, -2408, 1609, -565, -565, 1609, -2408, 2841, -2841, 2408, -1609, 565, 565, -1609, 2408, -2841, 2841, -2408, 1609, -565, -565, 1609, -2408, 2841, -2841, 2408, -1609, 565, 565, -1609, 2408, -2841, 2841, -2408, 1609, -565, -565, 1609, -2408, 2841, -2841, 2408, -1609, 565],
    [495, -1428, 2193, -2702, 2895, -2750, 2283, -1550, 635, 355, -1302, 2098, -2648, 2888, -2791, 2368, -1668, 772, 213, -1174, 1997, -2587, 2875, -2826, 2447, -1782, 909, 71, -1042, 1892, -2520, 2854, -2854, 2520, -1892, 1042, -71, -909, 1782, -2447, 2826, -2875, 2587, -1997, 1174, -213, -772, 1668, -2368, 2791, -2888, 2648, -2098, 1302, -355, -635, 1550, -2283, 2750, -2895, 2702, -2193, 1428, -495],
    [425, -1238, 1945, -2484, 2810, -2893, 2727, -2326, 1725, -976, 142, 704, -1489, 2146, -2618, 2865, -2865, 2618, -2146, 1489, -704, -142, 976, -1725, 2326, -2727, 2893, -2810, 2484, -1945, 1238, -425, -425, 1238, -1945, 2484, -2810, 2893, -2727, 2326, -1725, 976, -142, -704, 1489, -2146, 2618, -2865, 2865, -2618, 2146, -1489, 704, 142, -976, 1725, -2326, 2727, -2893, 2810, -2484, 1945, -1238, 425],
    [355, -1042, 1668, -2193, 2587, -2826, 2895, -2791, 2520, -2098, 1550, -909, 213, 495, -1174, 1782, -2283, 2648, -2854, 2888, -2750, 2447, -1997, 1428, -772, 71, 635, -1302, 1892, -2368, 2702, -2875, 2875, -2702, 2368, -1892, 1302, -635, -71, 772, -1428, 1997, -2447, 2750, -2888, 2854, -2648, 2283, -1782, 1174, -495, -213, 909, -1550, 2098, -2520, 2791, -2895, 2826, -2587, 2193, -1668, 1042, -355],
    [284, -841, 1365, -1837, 2239, -2554, 2772, -2882, 2882, -2772, 2554, -2239, 1837, -1365, 841, -284, -284, 841, -1365, 1837, -2239, 2554, -2772, 2882, -2882, 2772, -2554, 2239, -1837, 1365, -841, 284, 284, -841, 1365, -1837, 2239, -2554, 2772, -2882, 2882, -2772, 2554, -2239, 1837, -1365, 841, -284, -284, 841, -1365, 1837, -2239, 2554, -2772, 2882, -2882, 2772, -2554, 2239, -1837, 1365, -841, 284],
    [213, -635, 1042, -1428, 1782, -2098, 2368, -2587, 2750, -2854, 2895, -2875, 2791, -2648, 2447, -2193, 1892, -1550, 1174, -772, 355, 71, -495, 909, -1302, 1668, -1997, 2283, -2520, 2702, -2826, 2888, -2888, 2826, -2702, 2520, -2283, 1997, -1668, 1302, -909, 495, -71, -355, 772, -1174, 1550, -1892, 2193, -2447, 2648, -2791, 2875, -2895, 2854, -2750, 2587, -2368, 2098, -1782, 1428, -1042, 635, -213],
    [142, -425, 704, -976, 1238, -1489, 1725, -1945, 2146, -2326, 2484, -2618, 2727, -2810, 2865, -2893, 2893, -2865, 2810, -2727, 2618, -2484, 2326, -2146, 1945, -1725, 1489, -1238, 976, -704, 425, -142, -142, 425, -704, 976, -1238, 1489, -1725, 1945, -2146, 2326, -2484, 2618, -2727, 2810, -2865, 2893, -2893, 2865, -2810, 2727, -2618, 2484, -2326, 2146, -1945, 1725, -1489, 1238, -976, 704, -425, 142],
    [71, -213, 355, -495, 635, -772, 909, -1042, 1174, -1302, 1428, -1550, 1668, -1782, 1892, -1997, 2098, -2193, 2283, -2368, 2447, -2520, 2587, -2648, 2702, -2750, 2791, -2826, 2854, -2875, 2888, -2895, 2895, -2888, 2875, -2854, 2826, -2791, 2750, -2702, 2648, -2587, 2520, -2447, 2368, -2283, 2193, -2098, 1997, -1892, 1782, -1668, 1550, -1428, 1302, -1174, 1042, -909, 772, -635, 495, -355, 213, -71],
];
