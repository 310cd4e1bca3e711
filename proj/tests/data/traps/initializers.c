/* Brace initializers, designated members and function-pointer tables. */

static int values[] = { 1, 2, 3 };

struct ops {
	int (*open)(void);
	int (*close)(void);
};

static struct ops table = { .open = 0, .close = 0 };

static int (*jump_table[2])(void) = { 0, 0 };

static struct {
	int x;
	int y;
} anonymous = { 4, 5 };

int trap_initializers(void)
{
	return values[0] + anonymous.x + table.open == 0;
}
