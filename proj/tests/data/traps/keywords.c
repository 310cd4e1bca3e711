/* Control-flow keywords followed by parenthesized expressions and braces
 * must never register as procedure definitions. */

int trap_keywords(int x)
{
	if (x) { x--; }
	while (x) { x--; }
	for (;;) { break; }
	switch (x) {
	case 1:
		break;
	default:
		break;
	}
	do { x++; } while (0);
	return sizeof(int) + (int)sizeof(x);
}
