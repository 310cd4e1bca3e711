/* Positive controls: K&R parameter declarations and post-parameter
 * annotations still count as definitions. */

int knr_max(a, b)
int a;
int b;
{
	return a > b ? a : b;
}

char *knr_copy(dst, src, n)
char *dst;
const char *src;
int n;
{
	while (n-- > 0)
		dst[n] = src[n];
	return dst;
}

static void annotated_def(void) __attribute__((unused))
{
}
